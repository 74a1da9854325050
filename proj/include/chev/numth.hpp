#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chev/bigint.hpp"

namespace chev {

/// Möbius function. Throws InvalidArgument for n == 0.
int mobius(std::uint64_t n);

/// phi_r(n) = n^r * prod_{p | n} (1 - p^-r). phi_1 is Euler's totient.
BigInt phi_r(std::uint64_t n, unsigned r);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned k;
};

/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<PrimePower> prime_power(std::uint64_t q);

/// A partition: weakly decreasing positive parts. The empty partition is a
/// valid value (size 0).
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument if the parts are not positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Column lengths of the diagram: dual()[i] = #{j : parts[j] > i}.
  Partition dual() const;
  /// Part size -> multiplicity, for sizes that occur.
  std::map<int, int> multiplicities() const;
  /// Sum of squared column lengths.
  long column_square_sum() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionStats {
  Partition dual;
  std::map<int, int> mults;
  long colsq = 0;
};

PartitionStats partition_stats(const Partition& lambda);

/// Visits every partition of n in reverse lexicographic order, starting at
/// (n). The callback sees a temporary part list. Throws CapExceeded when
/// n > cap; a negative cap means caps().partition_n.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit,
                        int cap = -1);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions(int n, int cap = -1);

}  // namespace chev
