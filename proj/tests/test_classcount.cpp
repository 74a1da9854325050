#include "chev/classcount.hpp"
#include "chev/error.hpp"
#include "chev/numth.hpp"
#include "doctest.h"

using namespace chev;

namespace {

QPoly qpoly(std::vector<long> c) { return QPoly(std::vector<BigInt>(c.begin(), c.end())); }

BigInt k(Family f, int n, std::uint64_t q) {
  GroupSpec g;
  g.family = f;
  g.n = n;
  g.q = q;
  return class_count(g).value;
}

}  // namespace

TEST_SUITE("classcount") {
  TEST_CASE("general linear and unitary") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
      CHECK(k_gl(1, q) == q - 1);
      CHECK(k_gu(1, q) == q + 1);
    }
    CHECK(k_gl(2, 2) == 3);
    CHECK(k_gl(2, 3) == 8);
    CHECK(k_gl(3, 2) == 6);
    CHECK(k_gu(2, 2) == 9);
    CHECK(k_gl_symbolic(2) == qpoly({-1, 0, 1}));
    CHECK(k_gu_symbolic(2) == qpoly({1, 2, 1}));
    for (int n = 1; n <= 8; ++n) {
      for (std::uint64_t q : {2, 3, 5}) {
        CHECK(k_gl_symbolic(n).eval(q) == k_gl(n, q));
        CHECK(k_gu_symbolic(n).eval(q) == k_gu(n, q));
      }
    }
  }

  TEST_CASE("type A variants") {
    CHECK(k_typeA(TypeAVariant::SL, 2, 3) == 7);
    CHECK(k_typeA(TypeAVariant::SL, 2, 5) == 9);
    CHECK(k_typeA(TypeAVariant::PSL, 2, 5) == 5);
    for (std::uint64_t q : {2, 3, 4}) CHECK(k_typeA(TypeAVariant::SU, 1, q) == 1);
  }

  TEST_CASE("groups between SL and GL") {
    for (int n = 1; n <= 4; ++n) {
      for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        CHECK(k_between_sl_gl(n, q, 1) == k_gl(n, q));
        CHECK(k_between_sl_gl(n, q, q - 1) == k_typeA(TypeAVariant::SL, n, q));
      }
    }
    CHECK(k_between_sl_gl(2, 5, 2) == 18);  // (k(GL(2,5)) + 3 k(GL(1,5))) / 2
    CHECK_THROWS_AS(k_between_sl_gl(2, 5, 3), InvalidArgument);
  }

  TEST_CASE("symplectic") {
    CHECK(k_sp(4, 3) == 34);
    CHECK(k_sp(4, 2) == 11);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) CHECK(k_sp(2, q) == k_typeA(TypeAVariant::SL, 2, q));
    CHECK_THROWS_AS(k_sp(3, 3), InvalidArgument);
  }

  TEST_CASE("orthogonal") {
    const auto o42 = k_o_even(4, 2);
    CHECK(o42.plus == 9);
    CHECK(o42.minus == 7);
    const auto o43 = k_o_even(4, 3);
    CHECK(o43.plus == 25);
    CHECK(o43.minus == 22);
    CHECK(k_so(3, 3, OrthType::Odd) == 5);
    CHECK(k_so(4, 3, OrthType::Plus) == 20);
    CHECK(k_so(4, 3, OrthType::Minus) == 14);
    CHECK(k_symbolic(Family::SOOdd, 3, Parity::Odd) == qpoly({2, 1}));
    for (int dim : {3, 5, 7, 9}) {
      for (std::uint64_t q : {3, 5, 7}) CHECK(k_o_odd(dim, q) == 2 * k_so(dim, q, OrthType::Odd));
    }
    CHECK_THROWS_AS(k_so(5, 2, OrthType::Odd), InvalidArgument);
    CHECK_THROWS_AS(k_o_even(5, 3), InvalidArgument);
  }

  TEST_CASE("omega") {
    CHECK(k_omega(5, 3, OrthType::Odd) == 20);
    CHECK(k_omega(4, 5, OrthType::Plus) == 41);
    CHECK(k_omega(4, 5, OrthType::Minus) == 15);
    // The non-* type is exactly half of SO.
    for (int dim : {4, 6, 8, 10}) {
      for (std::uint64_t q : {3, 5, 7, 9}) {
        const bool star_plus = omega_star_is_plus(dim / 2, q);
        const OrthType other = star_plus ? OrthType::Minus : OrthType::Plus;
        CHECK(2 * k_omega(dim, q, other) == k_so(dim, q, other));
      }
    }
    CHECK_THROWS_AS(k_omega(5, 2, OrthType::Odd), InvalidArgument);
  }

  TEST_CASE("symbolic counts for non-integral polynomials are refused") {
    CHECK_THROWS_AS(k_symbolic(Family::OPlus, 4, Parity::Odd), InvalidArgument);
    CHECK_THROWS_AS(k_symbolic(Family::OmegaOdd, 5, Parity::Odd), InvalidArgument);
    CHECK_THROWS_AS(k_symbolic(Family::PSL, 2, Parity::Odd), InvalidArgument);
  }

  TEST_CASE("exceptional upper bounds") {
    CHECK(k_exceptional_upper(ExceptionalType::B2_2, 8) == 11);
    CHECK(k_exceptional_upper(ExceptionalType::G2, 2) == 17);
    CHECK(k_exceptional_upper(ExceptionalType::E8, 2) == 1302);
    CHECK_THROWS_AS(k_exceptional_upper(ExceptionalType::B2_2, 4), InvalidArgument);
    GroupSpec g;
    g.family = Family::Exceptional;
    g.exceptional = ExceptionalType::F4;
    g.q = 3;
    CHECK(class_count(g).upper_bound);
  }

  TEST_CASE("symmetric and alternating") {
    CHECK(k_sym_alt(3).sym == 3);
    CHECK(k_sym_alt(3).alt == 3);
    CHECK(k_sym_alt(4).sym == 5);
    CHECK(k_sym_alt(4).alt == 4);
    CHECK(k_sym_alt(5).sym == 7);
    CHECK(k_sym_alt(5).alt == 5);
    for (int m = 1; m <= 30; ++m) CHECK(k_sym_alt(m).sym == partitions(m).size());
  }

  TEST_CASE("dispatch agrees with family functions") {
    CHECK(k(Family::GL, 3, 4) == k_gl(3, 4));
    CHECK(k(Family::OMinus, 6, 5) == k_o_even(6, 5).minus);
    CHECK(k(Family::OmegaOdd, 7, 3) == k_omega(7, 3, OrthType::Odd));
    CHECK(k(Family::SymmetricGroup, 6, 0) == 11);
    for (auto f : all_families()) {
      const auto name = family_name(f);
      REQUIRE(parse_family(name));
      CHECK(*parse_family(name) == f);
    }
  }

  TEST_CASE("invalid field orders") {
    CHECK_THROWS_AS(k_gl(2, 6), InvalidArgument);
    CHECK_THROWS_AS(k_sp(4, 1), InvalidArgument);
  }
}
