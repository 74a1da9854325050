#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chev/bigint.hpp"
#include "chev/classcount.hpp"
#include "chev/numth.hpp"
#include "chev/report.hpp"

namespace chev {

/// Which kind of polynomial slot a partition is attached to. Plain slots are
/// the GL case; self-conjugate and conjugate-pair slots are the unitary case.
enum class SlotTag { Plain, SelfConjugate, ConjugatePair };

struct SlotEntry {
  int degree = 1;
  SlotTag tag = SlotTag::Plain;
  Partition lambda;
};

/// Jordan-form data for one class shape: a partition per abstract polynomial
/// slot. Slots name no concrete polynomial.
struct ClassType {
  std::vector<SlotEntry> entries;

  /// Sum of degree * |lambda|, with conjugate pairs counting twice.
  int dimension() const;
  std::string to_string() const;
};

/// Parses "d:tag:parts;..." with tag p (plain), s (self-conjugate) or
/// c (conjugate pair), e.g. "1:p:2,1;2:p:1".
ClassType parse_class_type(std::string_view text);

BigInt gl_centralizer_order(const ClassType& ct, std::uint64_t q);
BigInt gu_centralizer_order(const ClassType& ct, std::uint64_t q);

/// q^(sum of squared column lengths) * prod_i (1/q)_{m_i}.
Rational f_monotone(const Partition& lambda, std::uint64_t q);

/// Exact order of a matrix group. `dim` is the matrix dimension (degree for
/// Sym/Alt); `j` is the index in GL for BetweenSLGL.
BigInt group_order(Family f, int dim, std::uint64_t q, std::uint64_t j = 1);

/// Number of elements of p-power order. Supported: GL, GU, Sp, O+/O- (both
/// characteristics), O(odd dim) for odd q.
BigInt unipotent_count(Family f, int dim, std::uint64_t q);

/// Which elements a centralizer bound speaks about.
enum class BoundScope {
  AllElements,
  PlusMinusOnePrimary,  // characteristic polynomial (z +- 1)^dim
  Unipotent,
};

std::string_view bound_scope_name(BoundScope s);

struct BoundSpec {
  Family family = Family::GL;
  int n = 0;
  std::uint64_t q = 0;
  /// The closed form in double precision, not yet margin-adjusted.
  double nominal = 0;
  /// nominal lowered by the relative safety margin; safe to compare against.
  double value = 0;
  std::string tag;
  BoundScope scope = BoundScope::AllElements;
};

inline constexpr double kBoundMargin = 1e-9;

/// Pass if actual >= nominal, inconclusive if only within the margin, fail
/// otherwise.
Status check_lower_bound(const BigInt& actual, const BoundSpec& b);

/// Every closed-form centralizer lower bound for the family (dim is the
/// matrix dimension).
std::vector<BoundSpec> centralizer_bounds(Family f, int dim, std::uint64_t q);

/// The bound covering all elements of the group.
BoundSpec min_centralizer_lower_bound(Family f, int dim, std::uint64_t q);

/// q^r / 26 for exceptional groups.
BoundSpec exceptional_centralizer_bound(ExceptionalType t, std::uint64_t q);

/// q^r / (A min(q,r) (1 + log_q r)) with the unspecified constant A supplied.
double rank_centralizer_bound(int r, std::uint64_t q, double A = 1.0);

/// Visits every ClassType of GL(n,q) or GU(n,q) that is realized by at least
/// one class, with the number of classes of that shape. Throws CapExceeded
/// past caps().class_types shapes.
void for_each_class_type(Family f, int n, std::uint64_t q,
                         const std::function<void(const ClassType&, const BigInt&)>& visit);

struct ClassTypeSummary {
  BigInt classes;          // shapes counted with multiplicity
  std::size_t shapes = 0;  // distinct shapes
  BigInt class_equation;   // sum of |G| / |C| over classes
  BigInt group_order;
  BigInt min_centralizer;
  ClassType argmin;
};

/// Enumerates shapes once and aggregates (GL / GU only).
ClassTypeSummary summarize_class_types(Family f, int n, std::uint64_t q);

/// Minimum centralizer order in GL(n,q) or GU(n,q). Other families have no
/// closed-form centralizer data here; use the oracle.
BigInt min_centralizer_exact(Family f, int n, std::uint64_t q);

}  // namespace chev
