#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chev/bigint.hpp"
#include "chev/series.hpp"

namespace chev {

enum class Family {
  GL,
  SL,
  PGL,
  PSL,
  BetweenSLGL,
  GU,
  SU,
  PGU,
  PSU,
  Sp,
  OPlus,
  OMinus,
  SOPlus,
  SOMinus,
  SOOdd,
  OOdd,
  OmegaPlus,
  OmegaMinus,
  OmegaOdd,
  SymmetricGroup,
  AlternatingGroup,
  Exceptional,
};

/// Lower-case command-line name, e.g. "gl", "o-minus", "omega-odd".
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();

enum class ExceptionalType { B2_2, G2_2, G2, F4_2, D4_3, F4, E6, E6_2, E7, E8 };

std::string_view exceptional_name(ExceptionalType t);
std::optional<ExceptionalType> parse_exceptional(std::string_view name);
std::vector<ExceptionalType> all_exceptional_types();
/// Rank r used in the q^r comparisons.
int exceptional_rank(ExceptionalType t);
/// Coefficients (lowest degree first) of the class-number upper bound.
const std::vector<long>& exceptional_polynomial(ExceptionalType t);
/// Whether q satisfies the family's field restriction (e.g. 2^(2m+1)).
bool exceptional_q_allowed(ExceptionalType t, std::uint64_t q);

/// Which group is meant. `n` is the matrix dimension for matrix groups and
/// the degree for symmetric/alternating groups; `q` is absent (0) for the
/// latter. `j` is the index of H in GL(n,q) for BetweenSLGL.
struct GroupSpec {
  Family family = Family::GL;
  int n = 0;
  std::uint64_t q = 0;
  std::uint64_t j = 1;
  ExceptionalType exceptional = ExceptionalType::G2;
};

struct ClassCount {
  BigInt value;
  /// True for exceptional groups: the value bounds k from above.
  bool upper_bound = false;
};

/// Dispatches to the family-specific count below.
ClassCount class_count(const GroupSpec& g);

BigInt k_gl(int n, std::uint64_t q);
QPoly k_gl_symbolic(int n);
BigInt k_gu(int n, std::uint64_t q);
QPoly k_gu_symbolic(int n);

enum class TypeAVariant { SL, PGL, PSL, SU, PGU, PSU };
BigInt k_typeA(TypeAVariant v, int n, std::uint64_t q);

/// Class number of the group H with SL(n,q) <= H <= GL(n,q) of index j.
BigInt k_between_sl_gl(int n, std::uint64_t q, std::uint64_t j);

/// k(Sp(dim,q)), dim even.
BigInt k_sp(int dim, std::uint64_t q);

struct PlusMinus {
  BigInt plus;
  BigInt minus;
};

/// (k(O+(dim,q)), k(O-(dim,q))), dim even and >= 4.
PlusMinus k_o_even(int dim, std::uint64_t q);

enum class OrthType { Plus, Minus, Odd };

/// k(SO^type(dim,q)). Odd dim requires odd q (and type Odd); even dim takes
/// Plus or Minus in either characteristic.
BigInt k_so(int dim, std::uint64_t q, OrthType type);

/// k(O(dim,q)) for odd dim and odd q.
BigInt k_o_odd(int dim, std::uint64_t q);

/// k(Omega^type(dim,q)), q odd.
BigInt k_omega(int dim, std::uint64_t q, OrthType type);

/// Whether the * type for Omega(2n,q) is + (q = 1 mod 4 or n even).
bool omega_star_is_plus(int half_dim, std::uint64_t q);

BigInt k_exceptional_upper(ExceptionalType t, std::uint64_t q);

struct SymAlt {
  BigInt sym;
  BigInt alt;
};
SymAlt k_sym_alt(int m);

/// Characteristic parity used to pick a generating function symbolically.
enum class Parity { Odd, Even };

/// Coefficient extraction in the PolyInQ ring for the families whose count
/// is a single polynomial in q once the characteristic parity is fixed:
/// GL, GU, Sp, SO+/SO-, SOOdd, OOdd. O+/O- and OmegaOdd are integer valued
/// but not integer-coefficient polynomials; they throw InvalidArgument.
QPoly k_symbolic(Family f, int dim, Parity parity);

/// The Omega^*(dim,q) generating-function coefficient as a polynomial in q,
/// with the additive constant j (2 for * = +, 1 for * = -).
QPoly k_omega_star_symbolic(int dim, int j);

/// Generating functions, exposed for identity checks and the CLI. Each is the
/// product form the class count is extracted from.
namespace gf {
FactorSpec gl();
FactorSpec gu();
FactorSpec sp_odd();
FactorSpec sp_even();
/// Sum k(O+)+k(O-) in odd characteristic, read at t^(2n).
FactorSpec o_sum_odd();
/// Sum k(O+)+k(O-) in even characteristic, read at t^n.
FactorSpec o_sum_even();
/// Difference k(O+)-k(O-), read at t^n, both characteristics.
FactorSpec o_diff();
/// SO even dimension, odd q: the split-class part read at t^(2n).
FactorSpec so_split_odd();
/// SO even dimension, odd q: difference part read at t^n (times 2).
FactorSpec so_diff_odd();
/// SO odd dimension, odd q, product form.
FactorSpec so_odd_dim();
/// SO odd dimension, odd q, without the (1 - t^i)^-2 (1 - q t^i)^-1 factor
/// applied to the squared sum of t^{j(j+1)}.
FactorSpec so_odd_dim_tail();
/// SO even dimension, even q: the two summands and the difference.
FactorSpec so_even_p();
FactorSpec so_even_q();
FactorSpec so_even_diff();
/// Omega^* in even dimension: four summands.
FactorSpec omega_s1();
FactorSpec omega_s3();
FactorSpec omega_s4();
/// Omega in odd dimension: second summand.
FactorSpec omega_odd_s5();
}  // namespace gf

}  // namespace chev
