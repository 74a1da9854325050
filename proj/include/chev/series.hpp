#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chev/bigint.hpp"
#include "chev/config.hpp"
#include "chev/error.hpp"

namespace chev {

/// Dense integer polynomial in q, coefficients lowest degree first. The
/// representation is canonical: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants embed implicitly
  QPoly(const BigInt& c);  // NOLINT
  explicit QPoly(std::vector<BigInt> coeffs);

  /// sign * q^k
  static QPoly monomial(int sign, unsigned k);

  const std::vector<BigInt>& coeffs() const { return c_; }
  /// Coefficient of q^k (zero past the degree).
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  BigInt eval(const BigInt& q) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Divides every coefficient by d; ArithmeticError if any is not divisible.
  QPoly exact_div(long d) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Coefficient ring policies for TruncSeries. A policy knows how to build the
/// scalar sign * q^k; for the Integer ring q is a fixed number, for PolyInQ
/// it is the indeterminate.
struct IntegerRing {
  using value_type = BigInt;
  BigInt q = 0;

  value_type monomial(int sign, unsigned k) const { return sign * chev::pow(q, k); }
  static value_type from_long(long c) { return BigInt(c); }
  static value_type div_exact(const value_type& a, long d) {
    return chev::exact_div(a, BigInt(d), "series coefficient");
  }
  static int default_cap() { return caps().series_integer; }
  static bool is_one(const value_type& a) { return a == 1; }
  static bool is_unit_sign(const value_type& a) { return a == 1 || a == -1; }
};

struct PolyRing {
  using value_type = QPoly;

  value_type monomial(int sign, unsigned k) const { return QPoly::monomial(sign, k); }
  static value_type from_long(long c) { return QPoly(c); }
  static value_type div_exact(const value_type& a, long d) { return a.exact_div(d); }
  static int default_cap() { return caps().series_poly; }
  static bool is_one(const value_type& a) { return a == QPoly(1); }
  static bool is_unit_sign(const value_type& a) { return a == QPoly(1) || a == QPoly(-1); }
};

/// A power series in t truncated after t^order. Arithmetic never touches
/// coefficients beyond t^order; series of different orders do not mix.
template <class R>
class TruncSeries {
 public:
  using value_type = R;

  explicit TruncSeries(int order) : c_(check_order(order) + 1) {}
  TruncSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    check_order(order);
    c_.resize(order + 1);
  }

  static TruncSeries one(int order) {
    TruncSeries s(order);
    s.c_[0] = R(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_.at(k); }
  R& operator[](int k) { return c_.at(k); }
  const std::vector<R>& coeffs() const { return c_; }

  /// Coefficient of t^k, or zero when k is negative or past the order.
  R coeff_or_zero(int k) const { return (k >= 0 && k <= order()) ? c_[k] : R(0); }

  /// In place: this *= (1 + c t^b)^e. b >= 1; e may be negative, in which
  /// case the factor is inverted as a geometric series.
  void mul_binomial(const R& c, int b, int e) {
    if (b < 1) throw InvalidArgument("binomial factor needs a positive t-exponent");
    const int n = order();
    if (b > n) return;
    if ((e > 0 ? e : -e) > n / b + 1) {
      mul_binomial_power(c, b, BigInt(e));
      return;
    }
    const bool unit = (c == R(1)), neg_unit = (c == R(-1));
    auto scaled = [&](const R& x) -> R {
      if (unit) return x;
      if (neg_unit) return -x;
      return c * x;
    };
    for (int rep = 0; rep < (e > 0 ? e : -e); ++rep) {
      if (e > 0) {
        for (int j = n; j >= b; --j) c_[j] += scaled(c_[j - b]);
      } else {
        for (int j = b; j <= n; ++j) c_[j] -= scaled(c_[j - b]);
      }
    }
  }

  /// this *= (1 + c t^b)^e for an arbitrary integer e, by expanding the
  /// factor with generalized binomial coefficients.
  void mul_binomial_power(const R& c, int b, const BigInt& e) {
    if (b < 1) throw InvalidArgument("binomial factor needs a positive t-exponent");
    const int n = order();
    if (b > n || e == 0) return;
    const int terms = n / b;
    std::vector<R> f(terms + 1);
    BigInt binom = 1;
    R cpow(1);
    f[0] = R(1);
    for (int k = 1; k <= terms; ++k) {
      binom = binom * (e - (k - 1)) / k;  // exact: C(e,k) = C(e,k-1)(e-k+1)/k
      cpow = cpow * c;
      f[k] = R(binom) * cpow;
    }
    for (int j = n; j >= b; --j) {
      for (int k = 1; k <= j / b; ++k) c_[j] += f[k] * c_[j - k * b];
    }
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncSeries& scale(const R& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

  void same_order(const TruncSeries& o) const {
    if (o.order() != order()) {
      throw InvalidArgument("series truncation orders differ: " + std::to_string(order()) +
                            " vs " + std::to_string(o.order()));
    }
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw InvalidArgument("negative truncation order");
    return order;
  }
  std::vector<R> c_;
};

using IntSeries = TruncSeries<BigInt>;
using PolySeries = TruncSeries<QPoly>;

/// Cauchy product truncated at the common order.
template <class R>
TruncSeries<R> mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  a.same_order(b);
  const int n = a.order();
  TruncSeries<R> r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == R(0)) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Multiplicative inverse. The constant term must be 1.
template <class R>
TruncSeries<R> inv(const TruncSeries<R>& a) {
  if (!(a[0] == R(1))) throw InvalidArgument("series inverse needs constant term 1");
  const int n = a.order();
  TruncSeries<R> r(n);
  r[0] = R(1);
  for (int k = 1; k <= n; ++k) {
    R acc(0);
    for (int j = 1; j <= k; ++j) {
      if (!(a[j] == R(0))) acc += a[j] * r[k - j];
    }
    r[k] = -acc;
  }
  return r;
}

/// One family of factors prod_i (1 + sign * q^(qa*i+qb) * t^(ta*i+tb))^exponent,
/// instantiated for i = 1, 2, ... (up to i_max when i_max > 0). With
/// ta == 0 the family must be finite.
struct FactorAtom {
  int sign = 1;
  int q_slope = 0;
  int q_offset = 0;
  int t_slope = 1;
  int t_offset = 0;
  int exponent = 1;
  int i_max = 0;
};

struct FactorSpec {
  std::vector<FactorAtom> atoms;

  FactorSpec& add(FactorAtom a) {
    atoms.push_back(a);
    return *this;
  }
};

namespace detail {
void validate_atom(const FactorAtom& a);
void check_series_cap(int order, int cap, const char* ring);
}  // namespace detail

/// Truncated expansion of the product described by spec. Factor
/// instantiation stops once the t-exponent exceeds N. A negative cap means
/// the ring's configured default.
template <class Ring>
TruncSeries<typename Ring::value_type> product_factors(const FactorSpec& spec, int N,
                                                       const Ring& ring, int cap = -1) {
  detail::check_series_cap(N, cap < 0 ? Ring::default_cap() : cap, "product_factors");
  TruncSeries<typename Ring::value_type> s = TruncSeries<typename Ring::value_type>::one(N);
  for (const auto& a : spec.atoms) {
    detail::validate_atom(a);
    for (int i = 1; a.i_max == 0 || i <= a.i_max; ++i) {
      const int b = a.t_slope * i + a.t_offset;
      if (b > N) {
        if (a.t_slope > 0) break;
        continue;
      }
      const int k = a.q_slope * i + a.q_offset;
      if (k < 0) throw InvalidArgument("negative q-exponent in factor");
      s.mul_binomial(ring.monomial(a.sign, static_cast<unsigned>(k)), b, a.exponent);
    }
  }
  return s;
}

/// Coefficientwise evaluation of a PolyInQ series at an integer q.
IntSeries evaluate(const PolySeries& s, const BigInt& q);

/// 1 + sum_{n>=1} (-1)^n (x^{n(3n-1)/2} + x^{n(3n+1)/2}), truncated at N.
IntSeries pentagonal_series(int N);

/// sum_{n>=0} t^{n(n+1)/2}, truncated at N.
IntSeries gauss_triangular_series(int N);

/// sum_{n in Z} t^{n^2}, truncated at N.
IntSeries jacobi_square_series(int N);

/// sum_{j>=0} t^{j(j+1)}, truncated at N.
IntSeries even_triangular_series(int N);

}  // namespace chev
