#include "chev/numth.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chev/config.hpp"
#include "chev/error.hpp"

namespace chev {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto ps = prime_factors(q);
  if (ps.size() != 1) return std::nullopt;
  unsigned k = 0;
  for (std::uint64_t m = q; m > 1; m /= ps[0]) ++k;
  return PrimePower{ps[0], k};
}

int mobius(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("mobius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt phi_r(std::uint64_t n, unsigned r) {
  if (n == 0 || r == 0) throw InvalidArgument("phi_r: n and r must be positive");
  // n^r prod (1 - p^-r) = prod over p^a || n of p^{ar} - p^{(a-1)r}
  BigInt result = 1;
  std::uint64_t m = n;
  for (auto p : prime_factors(n)) {
    unsigned a = 0;
    while (m % p == 0) {
      m /= p;
      ++a;
    }
    result *= pow(static_cast<long>(p), a * r) - pow(static_cast<long>(p), (a - 1) * r);
  }
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::dual() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.assign(parts_.front(), 0);
    for (int part : parts_) {
      for (int i = 0; i < part; ++i) ++cols[i];
    }
  }
  return Partition(std::move(cols));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int part : parts_) ++m[part];
  return m;
}

long Partition::column_square_sum() const {
  long s = 0;
  const Partition d = dual();
  for (int c : d.parts()) s += static_cast<long>(c) * c;
  return s;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

PartitionStats partition_stats(const Partition& lambda) {
  PartitionStats st;
  st.dual = lambda.dual();
  st.mults = lambda.multiplicities();
  for (int c : st.dual.parts()) st.colsq += static_cast<long>(c) * c;
  return st;
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit,
                        int cap) {
  if (n < 0) throw InvalidArgument("partitions: n must be non-negative");
  const int limit = cap < 0 ? caps().partition_n : cap;
  if (n > limit) {
    throw CapExceeded("partitions: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(limit));
  }
  std::vector<int> a;
  if (n == 0) {
    visit(a);
    return;
  }
  a.push_back(n);
  while (true) {
    visit(a);
    // Next partition in reverse lexicographic order: strip trailing 1s,
    // decrement the last part > 1, and refill greedily.
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    const int k = --a.back();
    int rem = ones + 1;
    while (rem > 0) {
      const int part = std::min(k, rem);
      a.push_back(part);
      rem -= part;
    }
  }
}

std::vector<Partition> partitions(int n, int cap) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& p) { out.emplace_back(p); }, cap);
  return out;
}

}  // namespace chev
