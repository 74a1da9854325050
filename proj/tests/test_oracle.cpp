#include <algorithm>

#include "chev/centralizer.hpp"
#include "chev/error.hpp"
#include "chev/oracle.hpp"
#include "doctest.h"

using namespace chev;

namespace {

std::vector<std::uint64_t> class_sizes(const ConjugacyData& d) {
  std::vector<std::uint64_t> s;
  for (const auto& c : d.classes) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("field axioms") {
    for (unsigned q = 2; q <= 256; ++q) {
      if (q == 6 || q == 10 || q == 12) CHECK_THROWS_AS(FqField::get(q), InvalidArgument);
      bool prime_power = false;
      for (unsigned p = 2; p <= q; ++p) {
        if (q % p) continue;
        unsigned r = q;
        while (r % p == 0) r /= p;
        prime_power = r == 1;
        break;
      }
      if (!prime_power) continue;
      const FqField& F = FqField::get(q);
      CHECK_MESSAGE(F.q() == q, "q=" << q);
      if (q <= 64) CHECK_MESSAGE(F.verify_axioms(), "q=" << q);
    }
    CHECK_THROWS_AS(FqField::get(512), InvalidArgument);
  }

  TEST_CASE("closures") {
    const MatrixSpace s(FqField::get(3), 2);
    const OracleGroup sl = close_group(s, {s.from_rows({{1, 1}, {0, 1}}), s.from_rows({{1, 0}, {1, 1}})});
    CHECK(sl.order() == 24);
    CHECK(close_group(s, {s.identity()}).order() == 1);
    const MatrixSpace s2(FqField::get(2), 2);
    CHECK(close_group(s2, {s2.from_rows({{1, 1}, {0, 1}}), s2.from_rows({{0, 1}, {1, 1}})}).order() == 6);
    CHECK_THROWS_AS(close_group(s, {s.from_rows({{1, 1}, {0, 1}}), s.from_rows({{1, 0}, {1, 1}})}, "x", 10),
                    CapExceeded);
  }

  TEST_CASE("isometry groups") {
    CHECK(isometry_group(standard_form(FormKind::Alternating, FormType::None, 4, 2)).order() == 720);
    CHECK(isometry_group(standard_form(FormKind::Quadratic, FormType::Minus, 4, 2)).order() == 120);
    CHECK(isometry_group(standard_form(FormKind::SymmetricBilinear, FormType::Odd, 3, 3)).order() == 48);
    CHECK(isometry_group(standard_form(FormKind::SymmetricBilinear, FormType::Plus, 4, 3)).order() == 1152);
    CHECK(isometry_group(standard_form(FormKind::SymmetricBilinear, FormType::Minus, 4, 3)).order() == 1440);
    for (auto kind : {FormKind::Alternating, FormKind::Hermitian}) {
      CHECK(form_nondegenerate(standard_form(kind, FormType::None, 2, 3)));
    }
  }

  TEST_CASE("conjugacy data") {
    const auto gl = conjugacy_data(realize_group(Family::GL, 2, 2));
    CHECK(class_sizes(gl) == std::vector<std::uint64_t>{1, 2, 3});
    const OracleGroup sp = realize_group(Family::Sp, 4, 3);
    const auto d = conjugacy_data(sp);
    CHECK(d.classes.size() == 34);
    std::size_t semisimple = 0;
    for (const auto& c : d.classes) {
      semisimple += c.semisimple;
      CHECK(sp.order() % c.size == 0);
      CHECK(c.size * c.centralizer == sp.order());
    }
    CHECK(semisimple == 9);
  }

  TEST_CASE("burnside count agrees with orbits") {
    for (auto [f, n, q] : {std::tuple{Family::GL, 2, 3u}, std::tuple{Family::SL, 2, 5u},
                           std::tuple{Family::OMinus, 4, 2u}}) {
      const OracleGroup g = realize_group(f, n, q);
      CHECK(burnside_class_count(g) == conjugacy_data(g).classes.size());
    }
  }

  TEST_CASE("subgroups") {
    const OracleGroup om = realize_group(Family::OMinus, 4, 2);
    CHECK(dickson_kernel(om).order() == 60);
    CHECK(determinant_kernel(realize_group(Family::OOdd, 3, 3)).order() == 24);
    CHECK(derived_subgroup(realize_group(Family::OOdd, 5, 3)).order() == 25920);
    CHECK(realize_group(Family::OmegaOdd, 5, 3).order() == 25920);
    CHECK(permutation_group(5, true).order() == 60);
  }

  TEST_CASE("projective class counts") {
    CHECK(oracle_class_count(Family::PSL, 2, 5) == 5);
    CHECK(oracle_class_count(Family::PGL, 2, 3) == 5);
  }

  TEST_CASE("coset distributions") {
    const OracleGroup s4 = permutation_group(4, false);
    const OracleGroup a4 = permutation_group(4, true);
    const auto d = coset_class_distribution(s4, a4, {2, 3});
    CHECK(d.index == 2);
    CHECK(d.cyclic);
    CHECK(d.alpha == 2);
    CHECK(d.single_orbit_classes == std::vector<std::size_t>{2, 2});
    const auto whole = coset_class_distribution(s4, s4, {2, 3});
    CHECK(whole.index == 1);
    CHECK(whole.alpha == conjugacy_data(s4).classes.size());
    const OracleGroup sl = determinant_kernel(realize_group(Family::GL, 2, 3));
    const auto e = coset_class_distribution(realize_group(Family::GL, 2, 3), sl, {2, 3});
    CHECK(e.single_orbit_classes.front() == e.single_orbit_classes.back());
    CHECK_THROWS_AS(coset_class_distribution(s4, subgroup_where(s4, [](const Mat& x) { return x.at(3, 3) == 1; }, "s3"),
                                             {2, 3}),
                    InvalidArgument);
  }

  TEST_CASE("derangements") {
    const OracleGroup s3 = permutation_group(3, false);
    const OracleGroup stab = subgroup_where(s3, [](const Mat& x) { return x.at(2, 2) == 1; }, "stab");
    CHECK(derangement_proportion(s3, stab) == Rational(1, 3));
    CHECK(derangement_proportion(s3, s3) == 0);
    const OracleGroup s5 = permutation_group(5, false);
    const OracleGroup s4 = subgroup_where(s5, [](const Mat& x) { return x.at(4, 4) == 1; }, "s4");
    CHECK(derangement_proportion(s5, s4) == Rational(11, 30));  // 44 of 120
  }

  TEST_CASE("jordan blocks") {
    const MatrixSpace s(FqField::get(3), 3);
    const Mat x = s.from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}});
    CHECK(jordan_blocks(s, x, 1) == std::vector<int>{2});
    CHECK(jordan_blocks(s, x, 2) == std::vector<int>{1});
    CHECK(jordan_blocks(s, s.identity(), 1) == std::vector<int>{1, 1, 1});
  }

  TEST_CASE("matrix arithmetic") {
    const MatrixSpace s(FqField::get(5), 3);
    const Mat x = s.from_rows({{1, 2, 0}, {0, 1, 3}, {1, 0, 1}});
    CHECK(s.mul(x, s.inv(x)) == s.identity());
    CHECK(s.det(s.mul(x, x)) == FqField::get(5).mul(s.det(x), s.det(x)));
    CHECK(s.is_identity(s.pow(x, s.order(x))));
    CHECK_THROWS_AS(s.inv(s.from_rows({{1, 2, 0}, {2, 4, 0}, {0, 0, 1}})), ArithmeticError);
  }
}
