#include "chev/classcount.hpp"

#include <functional>
#include <array>
#include <numeric>

#include "chev/error.hpp"
#include "chev/numth.hpp"

namespace chev {
namespace {

struct FamilyName {
  Family f;
  std::string_view name;
};

constexpr std::array kFamilyNames{
    FamilyName{Family::GL, "gl"},
    FamilyName{Family::SL, "sl"},
    FamilyName{Family::PGL, "pgl"},
    FamilyName{Family::PSL, "psl"},
    FamilyName{Family::BetweenSLGL, "between-sl-gl"},
    FamilyName{Family::GU, "gu"},
    FamilyName{Family::SU, "su"},
    FamilyName{Family::PGU, "pgu"},
    FamilyName{Family::PSU, "psu"},
    FamilyName{Family::Sp, "sp"},
    FamilyName{Family::OPlus, "o-plus"},
    FamilyName{Family::OMinus, "o-minus"},
    FamilyName{Family::SOPlus, "so-plus"},
    FamilyName{Family::SOMinus, "so-minus"},
    FamilyName{Family::SOOdd, "so-odd"},
    FamilyName{Family::OOdd, "o-odd"},
    FamilyName{Family::OmegaPlus, "omega-plus"},
    FamilyName{Family::OmegaMinus, "omega-minus"},
    FamilyName{Family::OmegaOdd, "omega-odd"},
    FamilyName{Family::SymmetricGroup, "sym"},
    FamilyName{Family::AlternatingGroup, "alt"},
    FamilyName{Family::Exceptional, "exceptional"},
};

struct ExceptionalEntry {
  ExceptionalType t;
  std::string_view name;
  int rank;
  std::vector<long> poly;  // lowest degree first
  std::uint64_t base;      // 0: any prime power; else q must be base^(2m+1)
};

const std::vector<ExceptionalEntry>& exceptional_table() {
  static const std::vector<ExceptionalEntry> table{
      {ExceptionalType::B2_2, "2B2", 1, {3, 1}, 2},
      {ExceptionalType::G2_2, "2G2", 1, {8, 1}, 3},
      {ExceptionalType::G2, "G2", 2, {9, 2, 1}, 0},
      {ExceptionalType::F4_2, "2F4", 2, {17, 4, 1}, 2},
      {ExceptionalType::D4_3, "3D4", 4, {6, 1, 1, 1, 1}, 0},
      {ExceptionalType::F4, "F4", 4, {31, 15, 7, 2, 1}, 0},
      {ExceptionalType::E6, "E6", 6, {60, 21, 15, 2, 2, 1, 1}, 0},
      {ExceptionalType::E6_2, "2E6", 6, {62, 26, 18, 4, 2, 1, 1}, 0},
      {ExceptionalType::E7, "E7", 7, {103, 71, 35, 17, 7, 2, 1, 1}, 0},
      {ExceptionalType::E8, "E8", 8, {112, 67, 40, 16, 10, 3, 2, 1, 1}, 0},
  };
  return table;
}

const ExceptionalEntry& exceptional_entry(ExceptionalType t) {
  for (const auto& e : exceptional_table()) {
    if (e.t == t) return e;
  }
  throw InvalidArgument("unknown exceptional type");
}

std::uint64_t require_prime_power(std::uint64_t q) {
  if (!prime_power(q)) {
    throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  }
  return q;
}

void require_odd_q(std::uint64_t q, const char* what) {
  if (q % 2 == 0) throw InvalidArgument(std::string(what) + " requires odd q");
}

void require_nonneg(int n, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + ": n must be non-negative");
}

FactorAtom atom(int sign, int q_pow, int t_slope, int t_offset, int exponent) {
  FactorAtom a;
  a.sign = sign;
  a.q_offset = q_pow;
  a.t_slope = t_slope;
  a.t_offset = t_offset;
  a.exponent = exponent;
  return a;
}

// (1 - q t^(slope*i + offset))^-1 for i >= 1
FactorAtom q_pole(int t_slope, int t_offset = 0) { return atom(-1, 1, t_slope, t_offset, -1); }

template <class Ring>
typename Ring::value_type coeff_of(const FactorSpec& spec, int at, int order, const Ring& ring) {
  return product_factors(spec, order, ring)[at];
}

// ---------------------------------------------------------------------------
// Family evaluations, generic over the coefficient ring.

template <class Ring>
typename Ring::value_type gl_value(int n, const Ring& ring) {
  return coeff_of(gf::gl(), n, n, ring);
}

template <class Ring>
typename Ring::value_type gu_value(int n, const Ring& ring) {
  return coeff_of(gf::gu(), n, n, ring);
}

template <class Ring>
typename Ring::value_type sp_value(int half, Parity parity, const Ring& ring) {
  return coeff_of(parity == Parity::Odd ? gf::sp_odd() : gf::sp_even(), half, half, ring);
}

template <class Ring>
std::pair<typename Ring::value_type, typename Ring::value_type> o_even_value(int half,
                                                                             Parity parity,
                                                                             const Ring& ring) {
  using V = typename Ring::value_type;
  V sum = parity == Parity::Odd ? coeff_of(gf::o_sum_odd(), 2 * half, 2 * half, ring)
                                : coeff_of(gf::o_sum_even(), half, half, ring);
  V diff = coeff_of(gf::o_diff(), half, half, ring);
  V plus = Ring::div_exact(sum + diff, 2);
  V minus = Ring::div_exact(sum - diff, 2);
  return {plus, minus};
}

template <class Ring>
std::pair<typename Ring::value_type, typename Ring::value_type> so_even_value(int half,
                                                                              Parity parity,
                                                                              const Ring& ring) {
  using V = typename Ring::value_type;
  V sum, diff;
  if (parity == Parity::Odd) {
    // (3/2) A + (1/2) B at t^(2n); difference 2 D at t^n
    V a = coeff_of(gf::so_split_odd(), 2 * half, 2 * half, ring);
    V b = coeff_of(gf::o_sum_odd(), 2 * half, 2 * half, ring);
    sum = Ring::div_exact(V(3) * a + b, 2);
    diff = V(2) * coeff_of(gf::so_diff_odd(), half, half, ring);
  } else {
    // (1/2) P + (3/2) Q at t^n; difference 2 D at t^n
    V p = coeff_of(gf::so_even_p(), half, half, ring);
    V qq = coeff_of(gf::so_even_q(), half, half, ring);
    sum = Ring::div_exact(p + V(3) * qq, 2);
    diff = V(2) * coeff_of(gf::so_even_diff(), half, half, ring);
  }
  return {Ring::div_exact(sum + diff, 2), Ring::div_exact(sum - diff, 2)};
}

template <class Ring>
typename Ring::value_type so_odd_dim_value(int half, const Ring& ring) {
  return coeff_of(gf::so_odd_dim(), half, half, ring);
}

template <class Ring>
typename Ring::value_type omega_star_value(int half, int j, const Ring& ring) {
  using V = typename Ring::value_type;
  const int at = 2 * half;
  V s1 = coeff_of(gf::omega_s1(), at, at, ring);
  V s2 = coeff_of(gf::o_sum_odd(), at, at, ring);
  V s3 = coeff_of(gf::omega_s3(), at, at, ring);
  V s4 = coeff_of(gf::omega_s4(), at, at, ring);
  // 3/8 s1 + 1/8 s2 + 3/2 s3 + j s4
  return Ring::div_exact(V(3) * s1 + s2 + V(12) * s3 + V(8L * j) * s4, 8);
}

template <class Ring>
typename Ring::value_type omega_odd_value(int half, const Ring& ring) {
  using V = typename Ring::value_type;
  // coefficient of t^(2n) in (3/(4t)) S3 + (1/2) S5
  V s3 = coeff_of(gf::omega_s3(), 2 * half + 1, 2 * half + 1, ring);
  V s5 = coeff_of(gf::omega_odd_s5(), 2 * half, 2 * half, ring);
  return Ring::div_exact(V(3) * s3 + V(2) * s5, 4);
}

int half_even_dim(int dim, const char* what) {
  if (dim < 4 || dim % 2 != 0) {
    throw InvalidArgument(std::string(what) + ": dimension must be even and at least 4");
  }
  return dim / 2;
}

int half_odd_dim(int dim, const char* what, int min_dim = 3) {
  if (dim < min_dim || dim % 2 != 1) {
    throw InvalidArgument(std::string(what) + ": dimension must be odd and at least " +
                          std::to_string(min_dim));
  }
  return dim / 2;
}

Parity parity_of(std::uint64_t q) { return q % 2 ? Parity::Odd : Parity::Even; }

IntegerRing int_ring(std::uint64_t q) { return IntegerRing{BigInt(static_cast<unsigned long>(q))}; }

}  // namespace

// ---------------------------------------------------------------------------

std::string_view family_name(Family f) {
  for (const auto& e : kFamilyNames) {
    if (e.f == f) return e.name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& e : kFamilyNames) {
    if (e.name == name) return e.f;
  }
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& e : kFamilyNames) out.push_back(e.f);
  return out;
}

std::string_view exceptional_name(ExceptionalType t) { return exceptional_entry(t).name; }

std::optional<ExceptionalType> parse_exceptional(std::string_view name) {
  for (const auto& e : exceptional_table()) {
    if (e.name == name) return e.t;
  }
  return std::nullopt;
}

std::vector<ExceptionalType> all_exceptional_types() {
  std::vector<ExceptionalType> out;
  for (const auto& e : exceptional_table()) out.push_back(e.t);
  return out;
}

int exceptional_rank(ExceptionalType t) { return exceptional_entry(t).rank; }

const std::vector<long>& exceptional_polynomial(ExceptionalType t) {
  return exceptional_entry(t).poly;
}

bool exceptional_q_allowed(ExceptionalType t, std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp) return false;
  const auto base = exceptional_entry(t).base;
  if (base == 0) return true;
  return pp->p == base && pp->k % 2 == 1;
}

namespace gf {

FactorSpec gl() { return FactorSpec{}.add(atom(-1, 0, 1, 0, 1)).add(q_pole(1)); }

FactorSpec gu() { return FactorSpec{}.add(atom(1, 0, 1, 0, 1)).add(q_pole(1)); }

FactorSpec sp_odd() { return FactorSpec{}.add(atom(1, 0, 1, 0, 4)).add(q_pole(1)); }

FactorSpec sp_even() {
  return FactorSpec{}
      .add(atom(-1, 0, 4, 0, 1))
      .add(atom(-1, 0, 4, -2, -1))
      .add(atom(-1, 0, 1, 0, -1))
      .add(q_pole(1));
}

FactorSpec o_sum_odd() { return FactorSpec{}.add(atom(1, 0, 2, -1, 4)).add(q_pole(2)); }

FactorSpec o_sum_even() {
  return FactorSpec{}.add(atom(1, 0, 1, 0, 1)).add(atom(1, 0, 2, -1, 2)).add(q_pole(1));
}

FactorSpec o_diff() { return FactorSpec{}.add(atom(-1, 0, 2, -1, 1)).add(q_pole(2)); }

FactorSpec so_split_odd() {
  return FactorSpec{}.add(atom(-1, 0, 2, 0, 2)).add(atom(-1, 0, 4, 0, -2)).add(q_pole(2));
}

FactorSpec so_diff_odd() { return FactorSpec{}.add(atom(1, 0, 1, 0, -1)).add(q_pole(2)); }

FactorSpec so_odd_dim() {
  return FactorSpec{}
      .add(atom(-1, 0, 4, 0, 2))
      .add(atom(-1, 0, 4, -2, -2))
      .add(atom(-1, 0, 1, 0, -2))
      .add(q_pole(1));
}

FactorSpec so_odd_dim_tail() { return FactorSpec{}.add(atom(-1, 0, 1, 0, -2)).add(q_pole(1)); }

FactorSpec so_even_p() {
  return FactorSpec{}.add(atom(1, 0, 2, -1, 2)).add(atom(-1, 0, 2, -1, -1)).add(q_pole(1));
}

FactorSpec so_even_q() { return FactorSpec{}.add(atom(1, 0, 1, 0, -1)).add(q_pole(1)); }

FactorSpec so_even_diff() { return FactorSpec{}.add(atom(1, 0, 1, 0, -1)).add(q_pole(2)); }

FactorSpec omega_s1() { return FactorSpec{}.add(atom(1, 0, 2, 0, -2)).add(q_pole(2)); }

FactorSpec omega_s3() { return FactorSpec{}.add(atom(1, 0, 2, -1, 2)).add(q_pole(4)); }

FactorSpec omega_s4() { return FactorSpec{}.add(atom(-1, 0, 4, -2, 1)).add(q_pole(4)); }

FactorSpec omega_odd_s5() {
  return FactorSpec{}
      .add(atom(-1, 0, 8, 0, 2))
      .add(atom(-1, 0, 8, -4, -2))
      .add(atom(-1, 0, 2, 0, -2))
      .add(q_pole(2));
}

}  // namespace gf

BigInt k_gl(int n, std::uint64_t q) {
  require_nonneg(n, "k_gl");
  return gl_value(n, int_ring(require_prime_power(q)));
}

QPoly k_gl_symbolic(int n) {
  require_nonneg(n, "k_gl");
  return gl_value(n, PolyRing{});
}

BigInt k_gu(int n, std::uint64_t q) {
  require_nonneg(n, "k_gu");
  return gu_value(n, int_ring(require_prime_power(q)));
}

QPoly k_gu_symbolic(int n) {
  require_nonneg(n, "k_gu");
  return gu_value(n, PolyRing{});
}

BigInt k_typeA(TypeAVariant v, int n, std::uint64_t q) {
  if (n < 1) throw InvalidArgument("k_typeA: n must be at least 1");
  require_prime_power(q);
  const bool unitary = v == TypeAVariant::SU || v == TypeAVariant::PGU || v == TypeAVariant::PSU;
  const std::uint64_t m = unitary ? q + 1 : q - 1;
  auto k_base = [&](int dim) { return unitary ? k_gu(dim, q) : k_gl(dim, q); };
  const auto nn = static_cast<std::uint64_t>(n);
  BigInt sum = 0;
  switch (v) {
    case TypeAVariant::SL:
    case TypeAVariant::SU:
    case TypeAVariant::PGL:
    case TypeAVariant::PGU: {
      const unsigned r = (v == TypeAVariant::SL || v == TypeAVariant::SU) ? 2 : 1;
      for (auto d : divisors(std::gcd(nn, m))) sum += phi_r(d, r) * k_base(n / static_cast<int>(d));
      return exact_div(sum, BigInt(static_cast<unsigned long>(m)), "Macdonald sum");
    }
    case TypeAVariant::PSL:
    case TypeAVariant::PSU: {
      for (auto d1 : divisors(m)) {
        for (auto d2 : divisors(m)) {
          if (nn % (d1 * d2) != 0) continue;
          sum += phi_r(d1, 1) * phi_r(d2, 2) * k_base(n / static_cast<int>(d1 * d2));
        }
      }
      const BigInt denom = BigInt(static_cast<unsigned long>(m)) *
                           BigInt(static_cast<unsigned long>(std::gcd(nn, m)));
      return exact_div(sum, denom, "Macdonald projective sum");
    }
  }
  throw InvalidArgument("k_typeA: unknown variant");
}

BigInt k_between_sl_gl(int n, std::uint64_t q, std::uint64_t j) {
  if (n < 1) throw InvalidArgument("k_between_sl_gl: n must be at least 1");
  require_prime_power(q);
  if (j == 0 || (q - 1) % j != 0) {
    throw InvalidArgument("k_between_sl_gl: j = " + std::to_string(j) + " does not divide q-1");
  }
  BigInt sum = 0;
  for (auto d : divisors(std::gcd(j, static_cast<std::uint64_t>(n)))) {
    sum += phi_r(d, 2) * k_gl(n / static_cast<int>(d), q);
  }
  return exact_div(sum, BigInt(static_cast<unsigned long>(j)), "intermediate-group sum");
}

BigInt k_sp(int dim, std::uint64_t q) {
  if (dim < 2 || dim % 2 != 0) throw InvalidArgument("k_sp: dimension must be even and >= 2");
  require_prime_power(q);
  return sp_value(dim / 2, parity_of(q), int_ring(q));
}

PlusMinus k_o_even(int dim, std::uint64_t q) {
  const int half = half_even_dim(dim, "k_o_even");
  require_prime_power(q);
  auto [p, m] = o_even_value(half, parity_of(q), int_ring(q));
  return {p, m};
}

BigInt k_so(int dim, std::uint64_t q, OrthType type) {
  require_prime_power(q);
  if (dim % 2 == 1) {
    if (type != OrthType::Odd) throw InvalidArgument("k_so: odd dimension takes type odd");
    const int half = half_odd_dim(dim, "k_so");
    require_odd_q(q, "k_so in odd dimension");
    return so_odd_dim_value(half, int_ring(q));
  }
  if (type == OrthType::Odd) throw InvalidArgument("k_so: even dimension takes type plus/minus");
  const int half = half_even_dim(dim, "k_so");
  auto [p, m] = so_even_value(half, parity_of(q), int_ring(q));
  return type == OrthType::Plus ? p : m;
}

BigInt k_o_odd(int dim, std::uint64_t q) { return 2 * k_so(dim, q, OrthType::Odd); }

bool omega_star_is_plus(int half_dim, std::uint64_t q) { return q % 4 == 1 || half_dim % 2 == 0; }

BigInt k_omega(int dim, std::uint64_t q, OrthType type) {
  require_prime_power(q);
  require_odd_q(q, "k_omega");
  if (dim % 2 == 1) {
    if (type != OrthType::Odd) throw InvalidArgument("k_omega: odd dimension takes type odd");
    return omega_odd_value(half_odd_dim(dim, "k_omega", 5), int_ring(q));
  }
  if (type == OrthType::Odd) {
    throw InvalidArgument("k_omega: even dimension takes type plus/minus");
  }
  const int half = half_even_dim(dim, "k_omega");
  const bool star_plus = omega_star_is_plus(half, q);
  const bool is_star = (type == OrthType::Plus) == star_plus;
  if (is_star) return omega_star_value(half, star_plus ? 2 : 1, int_ring(q));
  // SO is the direct product of its centre and Omega for the other type
  return exact_div(k_so(dim, q, type), BigInt(2), "non-star Omega halving");
}

BigInt k_exceptional_upper(ExceptionalType t, std::uint64_t q) {
  if (!exceptional_q_allowed(t, q)) {
    throw InvalidArgument("k_exceptional_upper: q = " + std::to_string(q) + " not allowed for " +
                          std::string(exceptional_name(t)));
  }
  const auto& poly = exceptional_polynomial(t);
  BigInt r = 0;
  const BigInt qq(static_cast<unsigned long>(q));
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = r * qq + *it;
  return r;
}

SymAlt k_sym_alt(int m) {
  if (m < 1) throw InvalidArgument("k_sym_alt: m must be at least 1");
  long total = 0, even_types = 0, splitters = 0;
  for_each_partition(m, [&](const std::vector<int>& parts) {
    ++total;
    if ((m - static_cast<int>(parts.size())) % 2 == 0) ++even_types;
    bool distinct_odd = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] % 2 == 0 || (i > 0 && parts[i] == parts[i - 1])) {
        distinct_odd = false;
        break;
      }
    }
    if (distinct_odd) ++splitters;
  });
  return {BigInt(total), BigInt(even_types + splitters)};
}

namespace {

// O+/O- and Omega in odd dimension are integer valued but have half-integer
// (quarter-integer) coefficients as polynomials in q.
QPoly integral_or_throw(Family f, const std::function<QPoly()>& compute) {
  try {
    return compute();
  } catch (const ArithmeticError&) {
    throw InvalidArgument("k_symbolic: k(" + std::string(family_name(f)) +
                          ") is not a polynomial in q with integer coefficients");
  }
}

}  // namespace

QPoly k_symbolic(Family f, int dim, Parity parity) {
  const PolyRing ring;
  switch (f) {
    case Family::GL:
      return k_gl_symbolic(dim);
    case Family::GU:
      return k_gu_symbolic(dim);
    case Family::Sp:
      if (dim < 2 || dim % 2) throw InvalidArgument("k_symbolic: Sp needs even dimension");
      return sp_value(dim / 2, parity, ring);
    case Family::OPlus:
      return integral_or_throw(f, [&] {
        return o_even_value(half_even_dim(dim, "k_symbolic"), parity, ring).first;
      });
    case Family::OMinus:
      return integral_or_throw(f, [&] {
        return o_even_value(half_even_dim(dim, "k_symbolic"), parity, ring).second;
      });
    case Family::SOPlus:
      return so_even_value(half_even_dim(dim, "k_symbolic"), parity, ring).first;
    case Family::SOMinus:
      return so_even_value(half_even_dim(dim, "k_symbolic"), parity, ring).second;
    case Family::SOOdd:
    case Family::OOdd: {
      if (parity != Parity::Odd) throw InvalidArgument("k_symbolic: odd dimension needs odd q");
      QPoly v = so_odd_dim_value(half_odd_dim(dim, "k_symbolic"), ring);
      return f == Family::OOdd ? QPoly(2) * v : v;
    }
    case Family::OmegaOdd:
      if (parity != Parity::Odd) throw InvalidArgument("k_symbolic: Omega needs odd q");
      return integral_or_throw(
          f, [&] { return omega_odd_value(half_odd_dim(dim, "k_symbolic", 5), ring); });
    default:
      throw InvalidArgument("k_symbolic: family '" + std::string(family_name(f)) +
                            "' has no single polynomial class number");
  }
}

QPoly k_omega_star_symbolic(int dim, int j) {
  return omega_star_value(half_even_dim(dim, "k_omega_star_symbolic"), j, PolyRing{});
}

ClassCount class_count(const GroupSpec& g) {
  const auto q = g.q;
  switch (g.family) {
    case Family::GL:
      return {k_gl(g.n, q)};
    case Family::SL:
      return {k_typeA(TypeAVariant::SL, g.n, q)};
    case Family::PGL:
      return {k_typeA(TypeAVariant::PGL, g.n, q)};
    case Family::PSL:
      return {k_typeA(TypeAVariant::PSL, g.n, q)};
    case Family::BetweenSLGL:
      return {k_between_sl_gl(g.n, q, g.j)};
    case Family::GU:
      return {k_gu(g.n, q)};
    case Family::SU:
      return {k_typeA(TypeAVariant::SU, g.n, q)};
    case Family::PGU:
      return {k_typeA(TypeAVariant::PGU, g.n, q)};
    case Family::PSU:
      return {k_typeA(TypeAVariant::PSU, g.n, q)};
    case Family::Sp:
      return {k_sp(g.n, q)};
    case Family::OPlus:
      return {k_o_even(g.n, q).plus};
    case Family::OMinus:
      return {k_o_even(g.n, q).minus};
    case Family::SOPlus:
      return {k_so(g.n, q, OrthType::Plus)};
    case Family::SOMinus:
      return {k_so(g.n, q, OrthType::Minus)};
    case Family::SOOdd:
      return {k_so(g.n, q, OrthType::Odd)};
    case Family::OOdd:
      return {k_o_odd(g.n, q)};
    case Family::OmegaPlus:
      return {k_omega(g.n, q, OrthType::Plus)};
    case Family::OmegaMinus:
      return {k_omega(g.n, q, OrthType::Minus)};
    case Family::OmegaOdd:
      return {k_omega(g.n, q, OrthType::Odd)};
    case Family::SymmetricGroup:
      return {k_sym_alt(g.n).sym};
    case Family::AlternatingGroup:
      return {k_sym_alt(g.n).alt};
    case Family::Exceptional:
      return {k_exceptional_upper(g.exceptional, q), true};
  }
  throw InvalidArgument("class_count: unknown family");
}

}  // namespace chev
