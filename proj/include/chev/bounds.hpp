#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chev/bigint.hpp"
#include "chev/report.hpp"

namespace chev {

/// Families whose k(G)/q^n (or q^(n-1)) has a closed-form limit.
enum class LimitFamily {
  GL,
  SL,
  GU,
  SU,
  SpOddQ,
  SpEvenQ,
  OEvenOddQ,    // O+/-(2n,q), q odd
  SOEvenOddQ,   // SO+/-(2n,q), q odd
  SOOddDim,     // SO(2n+1,q), q odd
  OmegaEven,    // Omega+/-(2n,q), q odd
  OmegaOddDim,  // Omega(2n+1,q), q odd
  OEvenQ,       // O+/-(2n,q), q even
  SOEvenQ,      // SO+/-(2n,q), q even
};

std::string_view limit_family_name(LimitFamily f);
std::optional<LimitFamily> parse_limit_family(std::string_view name);
std::vector<LimitFamily> all_limit_families();
/// Whether the family's formulas need odd or even q (GL/SL/GU/SU take any).
bool limit_family_allows(LimitFamily f, std::uint64_t q);

/// prod_{i>=1, i <= i_max if i_max > 0} (1 + sign * q^-(slope*i + offset))^exponent.
/// Offsets may be half-integers.
struct LimitAtom {
  int sign = 1;
  double slope = 1;
  double offset = 0;
  int exponent = 1;
  int i_max = 0;
};

struct LimitTerm {
  Rational coeff{1};
  std::vector<LimitAtom> atoms;
};

/// Sum of coefficient * product terms.
struct LimitSpec {
  std::vector<LimitTerm> terms;
};

LimitSpec limit_spec(LimitFamily f);

struct LimitValue {
  double value = 0;
  /// Rigorous bound on |value - true limit| from the truncated tails
  /// (floating-point rounding aside).
  double error = 0;
  int depth = 0;
};

/// Evaluates the limit of k/q^n (k/q^(n-1) for SL, SU). tol >= 1e-10.
LimitValue limit_value(LimitFamily f, std::uint64_t q, double tol = 1e-10);
LimitValue evaluate_limit(const LimitSpec& spec, std::uint64_t q, double tol);

/// The n-th class number of the family (n is the half-dimension for the
/// symplectic/orthogonal families) and the exponent of the normalizing q-power.
BigInt limit_family_count(LimitFamily f, int n, std::uint64_t q);
int limit_family_norm_exponent(LimitFamily f, int n);
int limit_family_min_n(LimitFamily f);

struct ConvergenceRow {
  int n = 0;
  BigInt k;
  double ratio = 0;
  double delta = 0;
};

struct ConvergenceTable {
  LimitFamily family = LimitFamily::GL;
  std::uint64_t q = 0;
  double limit = 0;
  std::vector<ConvergenceRow> rows;
};

ConvergenceTable convergence_table(LimitFamily f, std::uint64_t q, int n_min, int n_max);

/// Quoted limit values: each limit at the stated q with its shown decimals.
struct LimitRemark {
  LimitFamily family;
  std::uint64_t q;
  Rational shown;
  int digits;  // decimals shown before the "..."
};
const std::vector<LimitRemark>& limit_remarks();

/// Limit windows, convergence tables at the remark points and the
/// Omega/SO ratio at q = 3.
VerifyReport check_limits(int n_max = 30);

struct InequalityGrid {
  int n_max = 30;
  std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9};
};

/// Every table and family-theorem inequality on the grid, with exact left
/// sides and exact rational right sides.
VerifyReport check_inequalities(const InequalityGrid& grid = {});

/// Symbolic k(GL(n,q)) for 1 <= n <= n_max is monic of degree n with zero
/// coefficients on q^(n-1) .. q^floor((n+1)/2).
VerifyReport check_polynomiality(int n_max = 12);

struct UnionBound {
  Rational union_bound;        // min(kM / minCent, 1)
  Rational derangement_bound;  // 1 - union_bound
};

/// Upper bound on |union of conjugates of M| / |G| from k(M) classes of M,
/// each contributing at most |G| / minCent elements.
UnionBound derangement_union_bound(const BigInt& kM, const BigInt& min_cent,
                                   const BigInt& group_order);

}  // namespace chev
