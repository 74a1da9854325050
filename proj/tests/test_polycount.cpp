#include <algorithm>
#include <set>

#include "chev/field.hpp"
#include "chev/polycount.hpp"
#include "doctest.h"

using namespace chev;

namespace {

// Monic polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int c = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<Poly> monic(int d, int p) {
  std::vector<Poly> out;
  Poly c(d + 1, 0);
  c[d] = 1;
  while (true) {
    out.push_back(c);
    int i = 0;
    while (i < d && ++c[i] == p) c[i++] = 0;
    if (i == d) break;
  }
  return out;
}

std::vector<std::vector<Poly>> irreducibles(int D, int p) {
  std::vector<std::vector<Poly>> irr(D + 1);
  for (int d = 1; d <= D; ++d) {
    for (const auto& f : monic(d, p)) {
      bool reducible = false;
      for (int e = 1; e <= d / 2 && !reducible; ++e) {
        for (const auto& g : irr[e]) {
          if (poly_mod(f, g, p).empty()) {
            reducible = true;
            break;
          }
        }
      }
      if (!reducible) irr[d].push_back(f);
    }
  }
  return irr;
}

// z^d f(1/z) / f(0), for f(0) != 0.
Poly reciprocal(const Poly& f, int p) {
  Poly r(f.rbegin(), f.rend());
  int inv = 1;
  while (inv * r.back() % p != 1) ++inv;
  for (auto& c : r) c = c * inv % p;
  return r;
}

}  // namespace

TEST_SUITE("polycount") {
  TEST_CASE("irreducible counts") {
    CHECK(count_irreducible(2, 1) == 1);
    CHECK(count_irreducible(2, 2) == 1);
    CHECK(count_irreducible(3, 1) == 2);
  }

  TEST_CASE("unitary counts") {
    CHECK(count_nonselfconj_unitary(2, 1) == 0);
    CHECK(count_nonselfconj_unitary(3, 1) == 4);
    CHECK(count_nonselfconj_unitary(2, 3) == 54);
  }

  TEST_CASE("star counts") {
    CHECK(star_counts(3, 2).Mstar[1] == 0);
    CHECK(star_counts(5, 2).Mstar[1] == 1);
    CHECK(star_counts(3, 2).Nstar[1] == 1);
  }

  TEST_CASE("identities hold") {
    CHECK(verify_polycount_identities(2, 40).ok());
    CHECK(verify_polycount_identities(3, 40).ok());
    CHECK(verify_polycount_identities(4, 20).ok());
  }

  TEST_CASE("counts agree with enumerating polynomials") {
    for (int p : {2, 3, 5}) {
      const int D = p == 5 ? 4 : 6;
      const auto irr = irreducibles(D, p);
      const PolyCounts pc = star_counts(p, D);
      for (int d = 1; d <= D; ++d) {
        std::size_t n = irr[d].size() - (d == 1 ? 1 : 0);  // drop z
        CHECK_MESSAGE(count_irreducible(p, d) == n, "p=" << p << " d=" << d);
        CHECK(pc.N[d] == n);
        std::size_t self = 0, others = 0;
        for (const auto& f : irr[d]) {
          if (f[0] == 0) continue;
          if (d == 1 && (f[0] == p - 1 || f[0] == 1)) continue;  // z - 1, z + 1
          (reciprocal(f, p) == f ? self : others) += 1;
        }
        CHECK_MESSAGE(pc.Mstar[d] == others / 2, "p=" << p << " d=" << d);
        if (d % 2 == 0) CHECK_MESSAGE(pc.Nstar[d / 2] == self, "p=" << p << " d=" << d);
      }
    }
  }

  TEST_CASE("unitary counts agree with enumerating field elements") {
    // An element of F_{q^(2i)} is self-conjugate when its orbit under
    // x -> x^(q^2) is closed under x -> x^(-q).
    const std::pair<unsigned, int> cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                              {3, 2}, {4, 1}, {4, 2}, {5, 1}, {7, 1}};
    for (auto [q, i] : cases) {
      unsigned big = 1;
      for (int e = 0; e < 2 * i; ++e) big *= q;
      const FqField& F = FqField::get(big);
      unsigned fq = 0;  // x -> x^q as a power of the Frobenius
      for (unsigned t = 1; t < q; t *= F.p()) ++fq;
      std::size_t self_exact = 0, nonself = 0;
      for (unsigned a = 1; a < big; ++a) {
        const auto x = static_cast<FqField::Elem>(a);
        const auto twisted = F.inv(F.frobenius(x, fq));
        int degree = i;
        for (int d = 1; d < i; ++d) {
          if (i % d == 0 && F.frobenius(x, 2 * d * fq) == x) {
            degree = d;
            break;
          }
        }
        bool self = false;
        for (int j = 0; j < degree; ++j) self = self || F.frobenius(x, 2 * j * fq) == twisted;
        if (!self) ++nonself;
        if (self && degree == i) ++self_exact;
      }
      CHECK_MESSAGE(count_selfconj_unitary_elements(q, i) == self_exact, "q=" << q << " i=" << i);
      if (i % 2 == 1) CHECK_MESSAGE(count_nonselfconj_unitary(q, i) == nonself, "q=" << q << " r=" << i);
    }
  }
}
