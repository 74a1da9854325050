#include "chev/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "chev/error.hpp"
#include "chev/numth.hpp"

namespace chev {
namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, lowest first, length k

// Frozen moduli; other extension fields use the least irreducible.
const std::map<unsigned, Poly>& frozen_moduli() {
  static const std::map<unsigned, Poly> m{
      {4, {1, 1, 1}},     // x^2 + x + 1
      {8, {1, 1, 0, 1}},  // x^3 + x + 1
      {9, {1, 0, 1}},     // x^2 + 1
      {25, {2, 0, 1}},    // x^2 + 2
      {27, {1, 2, 0, 1}}, // x^3 - x + 1
  };
  return m;
}

Poly digits(unsigned idx, unsigned p, unsigned k) {
  Poly d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

unsigned undigits(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Product of two residues modulo the monic modulus m of degree k.
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  const unsigned k = static_cast<unsigned>(a.size());
  Poly prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (unsigned d = 2 * k - 1; d >= k; --d) {
    const unsigned c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i <= k; ++i) {
      prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
    }
  }
  prod.resize(k);
  return prod;
}

// m is irreducible iff F_p[x]/(m) has no zero divisors; exhaustive
// multiplication is cheap at p^k <= 256.
bool is_irreducible(const Poly& m, unsigned p) {
  const unsigned k = static_cast<unsigned>(m.size()) - 1;
  unsigned n = 1;
  for (unsigned i = 0; i < k; ++i) n *= p;
  for (unsigned a = 1; a < n; ++a) {
    for (unsigned b = a; b < n; ++b) {
      const Poly r = mulmod(digits(a, p, k), digits(b, p, k), m, p);
      if (undigits(r, p) == 0) return false;
    }
  }
  return true;
}

Poly least_irreducible(unsigned p, unsigned k) {
  unsigned n = 1;
  for (unsigned i = 0; i < k; ++i) n *= p;
  for (unsigned low = 0; low < n; ++low) {
    Poly m = digits(low, p, k);
    m.push_back(1);
    if (m[0] != 0 && is_irreducible(m, p)) return m;
  }
  throw InvalidArgument("no irreducible polynomial found");
}

}  // namespace

const FqField& FqField::get(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<FqField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[q];
  if (!slot) slot.reset(new FqField(q));
  return *slot;
}

FqField::FqField(unsigned q) : q_(q) {
  const auto pp = prime_power(q);
  if (!pp || q > 256) {
    throw InvalidArgument("finite field order " + std::to_string(q) +
                          " must be a prime power <= 256");
  }
  p_ = static_cast<unsigned>(pp->p);
  k_ = pp->k;
  if (k_ > 1) {
    const auto it = frozen_moduli().find(q);
    modulus_ = it != frozen_moduli().end() ? it->second : least_irreducible(p_, k_);
  }
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly da = digits(a, p_, k_);
    Poly dn(k_);
    for (unsigned i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Elem>(undigits(dn, p_));
    for (unsigned b = 0; b < q; ++b) {
      const Poly db = digits(b, p_, k_);
      Poly s(k_);
      for (unsigned i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<Elem>(undigits(s, p_));
      const Poly m = k_ == 1 ? Poly{(da[0] * db[0]) % p_} : mulmod(da, db, modulus_, p_);
      mul_[a * q + b] = static_cast<Elem>(undigits(m, p_));
    }
  }
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
  square_.assign(q, false);
  for (unsigned a = 0; a < q; ++a) square_[mul_[a * q + a]] = true;
  for (unsigned g = 1; g < q; ++g) {
    unsigned order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = mul(x, static_cast<Elem>(g));
      ++order;
    }
    if (order == q - 1) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }
}

FqField::Elem FqField::inv(Elem a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(q_));
  return inv_[a];
}

FqField::Elem FqField::pow(Elem a, unsigned long e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqField::Elem FqField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FqField::Elem FqField::least_nonsquare() const {
  for (unsigned a = 1; a < q_; ++a) {
    if (!square_[a]) return static_cast<Elem>(a);
  }
  throw InvalidArgument("every element of F_" + std::to_string(q_) + " is a square");
}

FqField::Elem FqField::frobenius(Elem a, unsigned e) const {
  for (unsigned i = 0; i < e; ++i) a = pow(a, p_);
  return a;
}

unsigned FqField::absolute_trace(Elem a) const {
  Elem t = 0, x = a;
  for (unsigned i = 0; i < k_; ++i) {
    t = add(t, x);
    x = pow(x, p_);
  }
  return t;  // lies in the prime field, whose indices are its integer values
}

bool FqField::verify_axioms() const {
  for (unsigned a = 0; a < q_; ++a) {
    const Elem ea = static_cast<Elem>(a);
    if (add(ea, 0) != ea || mul(ea, 1) != ea || add(ea, neg(ea)) != 0) return false;
    if (a && mul(ea, inv(ea)) != 1) return false;
    if (frobenius(ea, k_) != ea) return false;
    for (unsigned b = 0; b < q_; ++b) {
      const Elem eb = static_cast<Elem>(b);
      if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) return false;
      if (frobenius(add(ea, eb)) != add(frobenius(ea), frobenius(eb))) return false;
      if (frobenius(mul(ea, eb)) != mul(frobenius(ea), frobenius(eb))) return false;
      for (unsigned c = 0; c < q_; ++c) {
        const Elem ec = static_cast<Elem>(c);
        if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) return false;
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) return false;
        if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) return false;
      }
    }
  }
  return true;
}

}  // namespace chev
