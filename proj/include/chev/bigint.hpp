#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "chev/error.hpp"

namespace chev {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt pow(long base, unsigned long exp) { return pow(BigInt(base), exp); }

/// a / b, throwing ArithmeticError when b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b, const char* what = "exact division") {
  if (b == 0) throw ArithmeticError(std::string(what) + ": division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) {
    throw ArithmeticError(std::string(what) + ": " + a.get_str() + " is not divisible by " +
                          b.get_str());
  }
  return q;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline bool fits_int64(const BigInt& x) {
  static const BigInt lo("-9223372036854775808"), hi("9223372036854775807");
  return x >= lo && x <= hi;
}

inline std::int64_t to_int64(const BigInt& x) {
  if (!fits_int64(x)) throw ArithmeticError("integer does not fit in 64 bits: " + x.get_str());
  return static_cast<std::int64_t>(std::stoll(x.get_str()));
}

}  // namespace chev
