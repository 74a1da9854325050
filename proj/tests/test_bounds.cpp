#include <cmath>

#include "chev/bounds.hpp"
#include "chev/classcount.hpp"
#include "chev/error.hpp"
#include "doctest.h"

using namespace chev;

namespace {

std::size_t failures(const VerifyReport& r, const std::string& claim_prefix) {
  std::size_t n = 0;
  for (const auto& e : r.entries()) {
    if (e.status == Status::Fail && e.claim.rfind(claim_prefix, 0) == 0) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("limit values") {
    CHECK(limit_value(LimitFamily::GL, 2).value == doctest::Approx(1.0));
    CHECK(std::abs(limit_value(LimitFamily::GU, 2).value - 8.25) < 0.01);
    CHECK(std::abs(limit_value(LimitFamily::SpOddQ, 3).value - 10.7) < 0.05);
    CHECK(std::abs(limit_value(LimitFamily::SOEvenQ, 2).value - 7.4) < 0.1);
    const auto v = limit_value(LimitFamily::SpEvenQ, 2, 1e-10);
    CHECK(v.error <= 1e-10);
    CHECK(v.value == doctest::Approx(15.17856).epsilon(1e-6));
  }

  TEST_CASE("limits against large-n ratios") {
    for (auto f : all_limit_families()) {
      for (std::uint64_t q : {2, 3, 4, 5}) {
        if (!limit_family_allows(f, q)) continue;
        const int n = 40;
        const double ratio = Rational(Rational(limit_family_count(f, n, q)) /
                                      Rational(pow(BigInt(static_cast<unsigned long>(q)),
                                                   static_cast<unsigned long>(limit_family_norm_exponent(f, n)))))
                                 .get_d();
        CHECK_MESSAGE(std::abs(ratio - limit_value(f, q).value) < 1e-3,
                      limit_family_name(f) << " q=" << q);
      }
    }
  }

  TEST_CASE("limit family names") {
    for (auto f : all_limit_families()) CHECK(parse_limit_family(limit_family_name(f)) == f);
    CHECK_FALSE(parse_limit_family("nope"));
  }

  TEST_CASE("convergence tables") {
    const auto gl = convergence_table(LimitFamily::GL, 2, 1, 40);
    CHECK(std::abs(gl.rows.back().delta) < 0.01);
    const auto gu = convergence_table(LimitFamily::GU, 2, 1, 40);
    CHECK(std::abs(gu.rows.back().ratio - 8.25) < 0.05);
    const auto sp = convergence_table(LimitFamily::SpOddQ, 3, 1, 30);
    CHECK(std::abs(sp.rows.back().ratio - 10.7) < 0.05);
    CHECK(std::abs(sp.rows.back().delta) < std::abs(sp.rows[14].delta));
    CHECK(gl.rows.front().k == k_gl(1, 2));
  }

  TEST_CASE("polynomiality") {
    const auto r = check_polynomiality(12);
    CHECK(r.ok());
    CHECK(r.count(Status::Fail) == 0);
    CHECK_THROWS_AS(check_polynomiality(13), CapExceeded);
  }

  TEST_CASE("inequalities on even q") {
    InequalityGrid g;
    g.n_max = 12;
    g.qs = {2, 4, 8};
    const auto r = check_inequalities(g);
    CHECK(r.count(Status::Fail) == 0);
    CHECK(r.entries().size() > 50);
  }

  TEST_CASE("the SL(2,q) upper bound is reported for odd q") {
    // k(SL(2,q)) = q + 4 exceeds q + 3 for odd q.
    InequalityGrid g;
    g.n_max = 4;
    g.qs = {3, 5};
    const auto r = check_inequalities(g);
    CHECK(failures(r, "sl.upper-A") == 2);
    CHECK(r.count(Status::Fail) == 2);
  }

  TEST_CASE("union bound arithmetic") {
    const auto a = derangement_union_bound(10, 100, 1000);
    CHECK(a.union_bound == Rational(1, 10));
    CHECK(a.derangement_bound == Rational(9, 10));
    const auto s5 = derangement_union_bound(5, 5, 120);
    CHECK(s5.union_bound == 1);
    CHECK(s5.derangement_bound == 0);
    CHECK(derangement_union_bound(50, 10, 1000).union_bound == 1);
    CHECK_THROWS_AS(derangement_union_bound(1, 0, 10), InvalidArgument);
    CHECK_THROWS_AS(derangement_union_bound(-1, 5, 10), InvalidArgument);
  }

  TEST_CASE("limit checks report the truncated quotes") {
    const auto r = check_limits(30);
    CHECK(r.count(Status::Fail) == 0);
    CHECK(r.count(Status::Inconclusive) == 3);
  }
}
