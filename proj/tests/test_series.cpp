#include <random>

#include "chev/error.hpp"
#include "chev/series.hpp"
#include "doctest.h"

using namespace chev;

namespace {

IntSeries ints(int order, std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntSeries(order, v);
}

PolySeries polys(int order, std::vector<QPoly> c) { return PolySeries(order, std::move(c)); }

QPoly qpoly(std::vector<long> c) { return QPoly(std::vector<BigInt>(c.begin(), c.end())); }

IntSeries random_series(std::mt19937_64& rng, int order, bool unit_lead) {
  std::uniform_int_distribution<long> dist(-20, 20);
  IntSeries s(order);
  for (int i = 0; i <= order; ++i) s[i] = dist(rng);
  if (unit_lead) s[0] = 1;
  return s;
}

FactorAtom atom(int sign, int t_slope, int t_offset, int exponent, int q_slope = 0, int q_offset = 0) {
  FactorAtom a;
  a.sign = sign;
  a.t_slope = t_slope;
  a.t_offset = t_offset;
  a.exponent = exponent;
  a.q_slope = q_slope;
  a.q_offset = q_offset;
  return a;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("multiplication examples") {
    CHECK(mul(ints(2, {1, 1}), ints(2, {1, -1})) == ints(2, {1, 0, -1}));
    const PolySeries a = polys(2, {QPoly(1), qpoly({0, 1})});
    CHECK(mul(a, a) == polys(2, {QPoly(1), qpoly({0, 2}), qpoly({0, 0, 1})}));
  }

  TEST_CASE("inversion examples") {
    CHECK(inv(ints(3, {1, -1})) == ints(3, {1, 1, 1, 1}));
    const PolySeries a = polys(2, {QPoly(1), qpoly({0, -1})});
    CHECK(inv(a) == polys(2, {QPoly(1), qpoly({0, 1}), qpoly({0, 0, 1})}));
    CHECK_THROWS(inv(ints(3, {2, 1})));
  }

  TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const IntSeries a = random_series(rng, 10, false), b = random_series(rng, 10, false),
                      c = random_series(rng, 10, false);
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
      CHECK(mul(a, IntSeries::one(10)) == a);
      const IntSeries u = random_series(rng, 8, true);
      CHECK(inv(inv(u)) == u);
      CHECK(mul(u, inv(u)) == IntSeries::one(8));
    }
  }

  TEST_CASE("mixing truncation orders is rejected") {
    CHECK_THROWS_AS(mul(IntSeries::one(3), IntSeries::one(4)), InvalidArgument);
    CHECK_THROWS_AS(IntSeries(-1), InvalidArgument);
  }

  TEST_CASE("product factors") {
    FactorSpec gl;
    gl.add(atom(-1, 1, 0, 1)).add(atom(-1, 1, 0, -1, 0, 1));
    CHECK(product_factors(gl, 2, PolyRing{})[2] == qpoly({-1, 0, 1}));
    FactorSpec gu;
    gu.add(atom(1, 1, 0, 1)).add(atom(-1, 1, 0, -1, 0, 1));
    CHECK(product_factors(gu, 2, PolyRing{})[2] == qpoly({1, 2, 1}));
    CHECK(product_factors(FactorSpec{}, 5, IntegerRing{3}) == IntSeries::one(5));
    CHECK_THROWS_AS(product_factors(gl, 500, IntegerRing{2}), CapExceeded);
    CHECK_THROWS_AS(product_factors(gl, 100, PolyRing{}), CapExceeded);
  }

  TEST_CASE("evaluation commutes with products") {
    FactorSpec spec;
    spec.add(atom(-1, 1, 0, 2)).add(atom(1, 2, -1, -1, 1, 0)).add(atom(-1, 1, 0, -1, 0, 1));
    for (long q : {2, 3, 5, 7}) {
      CHECK(evaluate(product_factors(spec, 30, PolyRing{}), q) == product_factors(spec, 30, IntegerRing{q}));
    }
  }

  TEST_CASE("theta-type series") {
    CHECK(pentagonal_series(7) == ints(7, {1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(pentagonal_series(0) == IntSeries::one(0));
    const IntSeries p15 = pentagonal_series(15);
    CHECK(p15[12] == -1);
    CHECK(p15[15] == -1);
    CHECK(gauss_triangular_series(6) == ints(6, {1, 1, 0, 1, 0, 0, 1}));
    CHECK(jacobi_square_series(4) == ints(4, {1, 2, 0, 0, 2}));
    CHECK(even_triangular_series(6) == ints(6, {1, 0, 1, 0, 0, 0, 1}));
  }

  TEST_CASE("theta-type series equal their product forms") {
    const int N = 60;
    FactorSpec euler, gauss, jacobi;
    euler.add(atom(-1, 1, 0, 1));
    gauss.add(atom(-1, 2, 0, 1)).add(atom(-1, 2, -1, -1));
    jacobi.add(atom(-1, 2, 0, 1)).add(atom(1, 2, -1, 2));
    CHECK(product_factors(euler, N, IntegerRing{0}) == pentagonal_series(N));
    CHECK(product_factors(gauss, N, IntegerRing{0}) == gauss_triangular_series(N));
    CHECK(product_factors(jacobi, N, IntegerRing{0}) == jacobi_square_series(N));
  }

  TEST_CASE("polynomials in q") {
    const QPoly p = qpoly({-1, 0, 1});
    CHECK(p.degree() == 2);
    CHECK(p.eval(3) == 8);
    CHECK(qpoly({1, 0, 0}) == qpoly({1}));
    CHECK(QPoly(0).is_zero());
    CHECK(qpoly({2, 4}).exact_div(2) == qpoly({1, 2}));
    CHECK_THROWS_AS(qpoly({1, 4}).exact_div(2), ArithmeticError);
    CHECK(p * p == qpoly({1, 0, -2, 0, 1}));
  }
}
