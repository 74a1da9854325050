#include <numeric>
#include <random>

#include "chev/error.hpp"
#include "chev/numth.hpp"
#include "chev/series.hpp"
#include "doctest.h"

using namespace chev;

TEST_SUITE("numth") {
  TEST_CASE("mobius values") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), InvalidArgument);
  }

  TEST_CASE("mobius sums to zero over divisors of n > 1") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      int s = 0;
      for (auto d : divisors(n)) s += mobius(d);
      CHECK_MESSAGE(s == (n == 1 ? 1 : 0), "n=" << n);
    }
  }

  TEST_CASE("phi_r values") {
    CHECK(phi_r(1, 2) == 1);
    CHECK(phi_r(2, 2) == 3);
    CHECK(phi_r(6, 2) == 24);
    CHECK(phi_r(12, 1) == 4);
  }

  TEST_CASE("phi_r is multiplicative and inverts by mobius") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, 400);
    for (int trial = 0; trial < 300; ++trial) {
      const auto m = dist(rng), n = dist(rng);
      const unsigned r = 1 + trial % 3;
      if (std::gcd(m, n) == 1) CHECK(phi_r(m * n, r) == phi_r(m, r) * phi_r(n, r));
      BigInt s = 0;
      for (auto d : divisors(n)) s += mobius(d) * pow(BigInt(static_cast<unsigned long>(n / d)), r);
      CHECK(phi_r(n, r) == s);
    }
    for (std::uint64_t n = 1; n <= 500; ++n) {
      BigInt s = 0;
      for (auto d : divisors(n)) s += phi_r(d, 1);
      CHECK(s == n);
    }
  }

  TEST_CASE("divisors, primes and prime powers") {
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    auto pp = prime_power(81);
    REQUIRE(pp);
    CHECK(pp->p == 3);
    CHECK(pp->k == 4);
    CHECK_FALSE(prime_power(12));
    CHECK_FALSE(prime_power(1));
  }

  TEST_CASE("partition counts") {
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(0).front().empty());
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(10).size() == 42);
    CHECK_THROWS_AS(partitions(70), CapExceeded);
  }

  TEST_CASE("partition counts agree with the inverse Euler product") {
    const int N = 40;
    const IntSeries p = inv(pentagonal_series(N));
    for (int n = 0; n <= N; ++n) CHECK_MESSAGE(BigInt(static_cast<unsigned long>(partitions(n).size())) == p[n], "n=" << n);
  }

  TEST_CASE("partition statistics") {
    const auto s = partition_stats(Partition({5, 4, 4, 1}));
    CHECK(s.dual == Partition({4, 3, 3, 3, 1}));
    CHECK(s.colsq == 44);
    CHECK(partition_stats(Partition({1})).colsq == 1);
    const auto t = partition_stats(Partition({2, 2}));
    CHECK(t.dual == Partition({2, 2}));
    CHECK(t.mults.at(2) == 2);
    CHECK(t.colsq == 8);
    CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
  }

  TEST_CASE("dual is an involution preserving size") {
    for (int n = 0; n <= 16; ++n) {
      for (const auto& l : partitions(n)) {
        const Partition d = l.dual();
        CHECK(d.dual() == l);
        CHECK(d.size() == n);
        long sq = 0;
        for (int c : d.parts()) sq += static_cast<long>(c) * c;
        CHECK(l.column_square_sum() == sq);
        int total = 0;
        for (auto [part, m] : l.multiplicities()) total += part * m;
        CHECK(total == n);
      }
    }
  }
}
