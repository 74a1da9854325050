#pragma once

#include <cstdint>
#include <vector>

namespace chev {

/// Finite field F_q, q = p^k <= 256, by lookup tables. Elements are bytes:
/// the element sum c_i x^i (c_i in 0..p-1) has index sum c_i p^i, so the
/// prime subfield is 0..p-1 with its usual integer labels.
class FqField {
 public:
  using Elem = std::uint8_t;

  /// The field of order q, built once and cached. Throws InvalidArgument if
  /// q is not a prime power or exceeds 256.
  static const FqField& get(unsigned q);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }
  /// Modulus coefficients, lowest degree first (monic, degree k); {} for
  /// prime fields.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Throws ArithmeticError for zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, unsigned long e) const;
  /// Reduction of an integer into the prime subfield.
  Elem from_int(long v) const;

  /// The least (by index) element generating the multiplicative group.
  Elem primitive() const { return primitive_; }
  bool is_square(Elem a) const { return square_[a]; }
  /// The least non-square (odd q only).
  Elem least_nonsquare() const;
  /// Absolute trace to F_p, as an integer 0..p-1.
  unsigned absolute_trace(Elem a) const;
  /// x -> x^(p^e).
  Elem frobenius(Elem a, unsigned e = 1) const;

  /// Exhaustive check of the field axioms. Returns false on any violation.
  bool verify_axioms() const;

 private:
  explicit FqField(unsigned q);

  unsigned p_ = 0, k_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  std::vector<bool> square_;
  Elem primitive_ = 1;
};

}  // namespace chev
