#include <cmath>
#include <map>

#include "chev/centralizer.hpp"
#include "chev/error.hpp"
#include "chev/oracle.hpp"
#include "doctest.h"

using namespace chev;

namespace {

// Centralizer order -> number of classes with that centralizer.
std::map<BigInt, BigInt> centralizer_profile(Family f, int n, std::uint64_t q) {
  std::map<BigInt, BigInt> m;
  for_each_class_type(f, n, q, [&](const ClassType& ct, const BigInt& count) {
    m[f == Family::GL ? gl_centralizer_order(ct, q) : gu_centralizer_order(ct, q)] += count;
  });
  return m;
}

std::map<BigInt, BigInt> oracle_profile(Family f, int n, unsigned q) {
  const ConjugacyData d = conjugacy_data(realize_group(f, n, q));
  std::map<BigInt, BigInt> m;
  for (const auto& c : d.classes) m[BigInt(static_cast<unsigned long>(c.centralizer))] += 1;
  return m;
}

}  // namespace

TEST_SUITE("centralizer") {
  TEST_CASE("general linear centralizers") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
      const BigInt Q(static_cast<unsigned long>(q));
      CHECK(gl_centralizer_order(parse_class_type("1:p:1,1"), q) == (Q * Q - 1) * (Q * Q - Q));
      CHECK(gl_centralizer_order(parse_class_type("1:p:1;1:p:1"), q) == (Q - 1) * (Q - 1));
      CHECK(gl_centralizer_order(parse_class_type("1:p:2"), q) == Q * (Q - 1));
    }
  }

  TEST_CASE("unitary centralizers") {
    for (std::uint64_t q : {2, 3, 4}) {
      const BigInt Q(static_cast<unsigned long>(q));
      CHECK(gu_centralizer_order(parse_class_type("1:s:1"), q) == Q + 1);
      CHECK(gu_centralizer_order(parse_class_type("1:s:1,1"), q) == Q * (Q + 1) * (Q * Q - 1));
      CHECK(gu_centralizer_order(parse_class_type("1:c:1"), q) == Q * Q - 1);
    }
    CHECK_THROWS_AS(parse_class_type("1:x:1"), InvalidArgument);
    CHECK_THROWS_AS(parse_class_type("1:p:1,2"), InvalidArgument);
  }

  TEST_CASE("class type centralizers match enumeration") {
    CHECK(centralizer_profile(Family::GL, 2, 2) == oracle_profile(Family::GL, 2, 2));
    CHECK(centralizer_profile(Family::GL, 2, 3) == oracle_profile(Family::GL, 2, 3));
    CHECK(centralizer_profile(Family::GL, 3, 2) == oracle_profile(Family::GL, 3, 2));
    CHECK(centralizer_profile(Family::GL, 2, 4) == oracle_profile(Family::GL, 2, 4));
    CHECK(centralizer_profile(Family::GU, 2, 2) == oracle_profile(Family::GU, 2, 2));
    CHECK(centralizer_profile(Family::GU, 2, 3) == oracle_profile(Family::GU, 2, 3));
    CHECK(centralizer_profile(Family::GU, 3, 2) == oracle_profile(Family::GU, 3, 2));
  }

  TEST_CASE("partition function") {
    for (std::uint64_t q : {2, 3, 5}) {
      for (int n = 1; n <= 8; ++n) {
        const Rational expected = Rational(pow(BigInt(static_cast<unsigned long>(q)), n)) *
                                  Rational(BigInt(static_cast<unsigned long>(q - 1)),
                                           BigInt(static_cast<unsigned long>(q)));
        CHECK(f_monotone(Partition({n}), q) == expected);
      }
    }
    CHECK(f_monotone(Partition({1, 1}), 2) == 6);
  }

  TEST_CASE("group orders") {
    CHECK(group_order(Family::Sp, 4, 3) == 51840);
    CHECK(group_order(Family::OMinus, 4, 2) == 120);
    CHECK(group_order(Family::OOdd, 3, 3) == 48);
    CHECK(group_order(Family::GU, 2, 2) == 18);
    CHECK(group_order(Family::OmegaOdd, 5, 3) == 25920);
    CHECK(group_order(Family::BetweenSLGL, 2, 5, 2) == 240);
  }

  TEST_CASE("unipotent counts") {
    CHECK(unipotent_count(Family::Sp, 4, 3) == 6561);
    CHECK(unipotent_count(Family::OPlus, 4, 2) == 40);
    CHECK(unipotent_count(Family::OMinus, 4, 2) == 56);
    for (int n = 1; n <= 6; ++n) {
      CHECK(unipotent_count(Family::GL, n, 3) == pow(BigInt(3), static_cast<unsigned long>(n * (n - 1))));
    }
  }

  TEST_CASE("closed-form bounds") {
    const BoundSpec gl = min_centralizer_lower_bound(Family::GL, 2, 2);
    CHECK(gl.nominal == doctest::Approx(4 * 0.5 / (std::exp(1.0) * (1 + std::log2(3.0)))).epsilon(1e-12));
    CHECK(gl.nominal == doctest::Approx(0.2846).epsilon(1e-4));
    CHECK(gl.value < gl.nominal);
    const BoundSpec sp = min_centralizer_lower_bound(Family::Sp, 4, 2);
    CHECK(sp.nominal == doctest::Approx(4 * std::sqrt(0.5 / (2 * std::exp(1.0) * 7))).epsilon(1e-12));
    bool found = false;
    for (const auto& b : centralizer_bounds(Family::Sp, 6, 5)) {
      if (b.tag == "sp-pm1-primary") {
        CHECK(b.scope == BoundScope::PlusMinusOnePrimary);
        found = true;
        CHECK(b.nominal == doctest::Approx(125.0));
      }
    }
    CHECK(found);
  }

  TEST_CASE("lower bound comparison") {
    BoundSpec b;
    b.nominal = 10;
    b.value = 10 * (1 - kBoundMargin);
    CHECK(check_lower_bound(10, b) == Status::Pass);
    CHECK(check_lower_bound(9, b) == Status::Fail);
    b.nominal = 10.000000001;
    CHECK(check_lower_bound(10, b) == Status::Inconclusive);
  }

  TEST_CASE("exact minimum centralizers") {
    CHECK(min_centralizer_exact(Family::GL, 2, 2) == 2);
    for (std::uint64_t q : {2, 3, 4, 5}) CHECK(min_centralizer_exact(Family::GL, 1, q) == q - 1);
    CHECK(min_centralizer_exact(Family::GU, 2, 2) == 6);
    CHECK_THROWS_AS(min_centralizer_exact(Family::Sp, 4, 3), InvalidArgument);
  }

  TEST_CASE("class equation on the class types") {
    for (std::uint64_t q : {2, 3}) {
      for (int n = 1; n <= 4; ++n) {
        const auto s = summarize_class_types(Family::GL, n, q);
        CHECK(s.class_equation == s.group_order);
        CHECK(s.classes == k_gl(n, q));
      }
    }
  }
}
