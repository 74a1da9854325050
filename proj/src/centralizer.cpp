#include "chev/centralizer.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "chev/config.hpp"
#include "chev/error.hpp"
#include "chev/polycount.hpp"

namespace chev {
namespace {

BigInt qpow(std::uint64_t q, unsigned long e) { return pow(BigInt(static_cast<unsigned long>(q)), e); }

void check_q(std::uint64_t q) {
  if (!prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
}

// Q^(colsq - sum m(m+1)/2) * prod_i prod_{k<=m_i} (Q^k - s^k), s = 1 for the
// GL shape and s = -1 for the unitary shape. This is Q^colsq prod (1/Q)_m
// (resp. prod (1 - (-1/Q)^k)) with the powers of Q cleared.
BigInt shape_factor(const BigInt& Q, const Partition& lambda, int s) {
  const auto st = partition_stats(lambda);
  long e = st.colsq;
  BigInt prod = 1;
  for (const auto& [part, m] : st.mults) {
    (void)part;
    e -= static_cast<long>(m) * (m + 1) / 2;
    BigInt Qk = 1;
    for (int k = 1; k <= m; ++k) {
      Qk *= Q;
      prod *= Qk - ((s < 0 && k % 2) ? -1 : 1);
    }
  }
  return pow(Q, static_cast<unsigned long>(e)) * prod;
}

void check_entry(const SlotEntry& e) {
  if (e.degree < 1) throw InvalidArgument("class type entry has degree < 1");
  if (e.lambda.empty()) throw InvalidArgument("class type entry has an empty partition");
}

char tag_char(SlotTag t) {
  switch (t) {
    case SlotTag::Plain:
      return 'p';
    case SlotTag::SelfConjugate:
      return 's';
    case SlotTag::ConjugatePair:
      return 'c';
  }
  return '?';
}

double log_base(double x, double q) { return std::log(x) / std::log(q); }

BoundSpec make_bound(Family f, int dim, std::uint64_t q, double nominal, std::string tag,
                     BoundScope scope) {
  BoundSpec b;
  b.family = f;
  b.n = dim;
  b.q = q;
  b.nominal = nominal;
  b.value = nominal * (1 - kBoundMargin);
  b.tag = std::move(tag);
  b.scope = scope;
  return b;
}

// [(1 - 1/q) / (2e (log_q(4n) + 4))]^(1/2)
double classical_root(int n, double q) {
  return std::sqrt((1 - 1 / q) / (2 * std::numbers::e * (log_base(4.0 * n, q) + 4)));
}

// One kind of polynomial slot in the class-type enumeration.
struct SlotKind {
  int degree;
  int weight;  // dimension used per unit of |lambda|
  SlotTag tag;
  BigInt available;
  BigInt Q;
  int sign;  // shape_factor sign
};

std::vector<SlotKind> slot_kinds(Family f, int n, std::uint64_t q) {
  std::vector<SlotKind> kinds;
  if (f == Family::GL) {
    for (int d = 1; d <= n; ++d) {
      kinds.push_back({d, d, SlotTag::Plain, count_irreducible(q, d), qpow(q, d), 1});
    }
  } else if (f == Family::GU) {
    const auto u = unitary_slots(q, n);
    for (int d = 1; d <= n; ++d) {
      if (u.self_conjugate[d] > 0) {
        kinds.push_back({d, d, SlotTag::SelfConjugate, u.self_conjugate[d], qpow(q, d), -1});
      }
      if (2 * d <= n && u.pairs[d] > 0) {
        kinds.push_back({d, 2 * d, SlotTag::ConjugatePair, u.pairs[d], qpow(q, 2 * d), 1});
      }
    }
  } else {
    throw InvalidArgument("class types are enumerated for gl and gu only");
  }
  return kinds;
}

struct Enumerator {
  const std::vector<SlotKind>& kinds;
  std::vector<std::vector<Partition>> by_size;  // all partitions of each size
  const std::function<void(const ClassType&, const BigInt&)>& visit;
  std::size_t cap;
  std::size_t shapes = 0;
  ClassType current;

  void run(std::size_t kind, int remaining, const BigInt& mult) {
    if (remaining == 0) {
      if (++shapes > cap) {
        throw CapExceeded("class type enumeration exceeds cap of " + std::to_string(cap));
      }
      visit(current, mult);
      return;
    }
    if (kind == kinds.size()) return;
    const auto& k = kinds[kind];
    // Flat list of candidate partitions for this kind, in a fixed order.
    std::vector<const Partition*> cands;
    for (int s = 1; s * k.weight <= remaining; ++s) {
      for (const auto& p : by_size[s]) cands.push_back(&p);
    }
    choose(kind, cands, 0, remaining, mult, 0, 0);
  }

  // Chooses a multiset of candidates for one kind as a nondecreasing index
  // sequence starting at `from`. The multiplicity picks up the falling
  // factorial of the available slots divided by the factorial of each run
  // of equal picks, one factor per pick.
  void choose(std::size_t kind, const std::vector<const Partition*>& cands, std::size_t from,
              int remaining, const BigInt& mult, long used, long run_len) {
    run(kind + 1, remaining, mult);
    const auto& k = kinds[kind];
    if (BigInt(used) >= k.available) return;
    for (std::size_t i = from; i < cands.size(); ++i) {
      const int w = cands[i]->size() * k.weight;
      if (w > remaining) break;
      const long run = (used > 0 && i == from) ? run_len + 1 : 1;
      const BigInt m = exact_div(mult * (k.available - used), BigInt(run), "class multiplicity");
      current.entries.push_back({k.degree, k.tag, *cands[i]});
      choose(kind, cands, i, remaining - w, m, used + 1, run);
      current.entries.pop_back();
    }
  }
};

}  // namespace

int ClassType::dimension() const {
  int n = 0;
  for (const auto& e : entries) {
    n += e.degree * e.lambda.size() * (e.tag == SlotTag::ConjugatePair ? 2 : 1);
  }
  return n;
}

std::string ClassType::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (i) os << ';';
    os << e.degree << ':' << tag_char(e.tag) << ':';
    const auto& p = e.lambda.parts();
    for (std::size_t j = 0; j < p.size(); ++j) os << (j ? "," : "") << p[j];
  }
  return os.str();
}

ClassType parse_class_type(std::string_view text) {
  ClassType ct;
  std::string s(text);
  std::stringstream entries(s);
  std::string item;
  while (std::getline(entries, item, ';')) {
    const auto c1 = item.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : item.find(':', c1 + 1);
    if (c2 == std::string::npos) throw InvalidArgument("class type entry '" + item + "' malformed");
    SlotEntry e;
    try {
      e.degree = std::stoi(item.substr(0, c1));
    } catch (const std::exception&) {
      throw InvalidArgument("class type degree in '" + item + "' is not a number");
    }
    const std::string tag = item.substr(c1 + 1, c2 - c1 - 1);
    if (tag == "p") {
      e.tag = SlotTag::Plain;
    } else if (tag == "s") {
      e.tag = SlotTag::SelfConjugate;
    } else if (tag == "c") {
      e.tag = SlotTag::ConjugatePair;
    } else {
      throw InvalidArgument("class type tag '" + tag + "' is not p, s or c");
    }
    std::vector<int> parts;
    std::stringstream ps(item.substr(c2 + 1));
    std::string part;
    while (std::getline(ps, part, ',')) {
      try {
        parts.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw InvalidArgument("class type part '" + part + "' is not a number");
      }
    }
    e.lambda = Partition(parts);
    check_entry(e);
    ct.entries.push_back(std::move(e));
  }
  if (ct.entries.empty()) throw InvalidArgument("empty class type");
  return ct;
}

BigInt gl_centralizer_order(const ClassType& ct, std::uint64_t q) {
  check_q(q);
  BigInt r = 1;
  for (const auto& e : ct.entries) {
    check_entry(e);
    if (e.tag != SlotTag::Plain) throw InvalidArgument("GL class types use plain slots only");
    r *= shape_factor(qpow(q, e.degree), e.lambda, 1);
  }
  return r;
}

BigInt gu_centralizer_order(const ClassType& ct, std::uint64_t q) {
  check_q(q);
  BigInt r = 1;
  for (const auto& e : ct.entries) {
    check_entry(e);
    switch (e.tag) {
      case SlotTag::SelfConjugate:
        if (e.degree % 2 == 0) {
          throw InvalidArgument("self-conjugate unitary slots have odd degree");
        }
        r *= shape_factor(qpow(q, e.degree), e.lambda, -1);
        break;
      case SlotTag::ConjugatePair:
        r *= shape_factor(qpow(q, 2 * e.degree), e.lambda, 1);
        break;
      case SlotTag::Plain:
        throw InvalidArgument("GU class types use self-conjugate or pair slots");
    }
  }
  return r;
}

Rational f_monotone(const Partition& lambda, std::uint64_t q) {
  if (q < 2) throw InvalidArgument("f_monotone needs q >= 2");
  const auto st = partition_stats(lambda);
  const BigInt Q(static_cast<unsigned long>(q));
  Rational r(pow(Q, static_cast<unsigned long>(st.colsq)));
  for (const auto& [part, m] : st.mults) {
    (void)part;
    BigInt Qk = 1;
    for (int k = 1; k <= m; ++k) {
      Qk *= Q;
      r *= Rational(Qk - 1, Qk);
    }
  }
  r.canonicalize();
  return r;
}

BigInt group_order(Family f, int dim, std::uint64_t q, std::uint64_t j) {
  if (f == Family::SymmetricGroup || f == Family::AlternatingGroup) {
    if (dim < 1) throw InvalidArgument("group_order: degree must be positive");
    BigInt fact = 1;
    for (int i = 2; i <= dim; ++i) fact *= i;
    return (f == Family::AlternatingGroup && dim >= 2) ? BigInt(fact / 2) : fact;
  }
  check_q(q);
  if (dim < 1) throw InvalidArgument("group_order: dimension must be positive");
  const unsigned long n = static_cast<unsigned long>(dim);
  auto gl = [&]() -> BigInt {
    BigInt r = qpow(q, n * (n - 1) / 2);
    for (unsigned long i = 1; i <= n; ++i) r *= qpow(q, i) - 1;
    return r;
  };
  auto gu = [&]() -> BigInt {
    BigInt r = qpow(q, n * (n - 1) / 2);
    for (unsigned long i = 1; i <= n; ++i) r *= qpow(q, i) - (i % 2 ? -1 : 1);
    return r;
  };
  auto sp_part = [&](unsigned long h, unsigned long upto) -> BigInt {
    BigInt r = 1;
    for (unsigned long i = 1; i <= upto; ++i) r *= qpow(q, 2 * i) - 1;
    (void)h;
    return r;
  };
  auto o_even = [&](int sign) -> BigInt {
    if (dim < 2 || dim % 2) throw InvalidArgument("group_order: O+/O- need even dimension");
    const unsigned long h = n / 2;
    return 2 * qpow(q, h * h - h) * (qpow(q, h) - sign) * sp_part(h, h - 1);
  };
  auto o_odd = [&]() -> BigInt {
    if (dim % 2 == 0 || q % 2 == 0) {
      throw InvalidArgument("group_order: odd-dimensional O needs odd dimension and odd q");
    }
    const unsigned long h = n / 2;
    return 2 * qpow(q, h * h) * sp_part(h, h);
  };
  auto omega_check = [&] {
    if (q % 2 == 0) throw InvalidArgument("group_order: Omega is built for odd q only");
  };
  const BigInt qm1(static_cast<unsigned long>(q - 1)), qp1(static_cast<unsigned long>(q + 1));
  switch (f) {
    case Family::GL:
      return gl();
    case Family::SL:
    case Family::PGL:
      return gl() / qm1;
    case Family::PSL:
      return gl() / qm1 / BigInt(std::gcd(n, static_cast<unsigned long>(q - 1)));
    case Family::BetweenSLGL:
      if (j == 0 || (q - 1) % j) throw InvalidArgument("group_order: j must divide q-1");
      return gl() / BigInt(static_cast<unsigned long>(j));
    case Family::GU:
      return gu();
    case Family::SU:
    case Family::PGU:
      return gu() / qp1;
    case Family::PSU:
      return gu() / qp1 / BigInt(std::gcd(n, static_cast<unsigned long>(q + 1)));
    case Family::Sp: {
      if (dim % 2) throw InvalidArgument("group_order: Sp needs even dimension");
      const unsigned long h = n / 2;
      return qpow(q, h * h) * sp_part(h, h);
    }
    case Family::OPlus:
      return o_even(1);
    case Family::OMinus:
      return o_even(-1);
    case Family::SOPlus:
      return o_even(1) / 2;
    case Family::SOMinus:
      return o_even(-1) / 2;
    case Family::OOdd:
      return o_odd();
    case Family::SOOdd:
      return o_odd() / 2;
    case Family::OmegaPlus:
      omega_check();
      return o_even(1) / 4;
    case Family::OmegaMinus:
      omega_check();
      return o_even(-1) / 4;
    case Family::OmegaOdd:
      return o_odd() / 4;
    default:
      throw InvalidArgument("group_order: unsupported family '" + std::string(family_name(f)) +
                            "'");
  }
}

BigInt unipotent_count(Family f, int dim, std::uint64_t q) {
  check_q(q);
  const unsigned long n = static_cast<unsigned long>(dim), h = n / 2;
  const bool odd_q = q % 2 == 1;
  switch (f) {
    case Family::GL:
    case Family::GU:
      if (dim < 1) break;
      return qpow(q, n * (n - 1));
    case Family::Sp:
      if (dim < 2 || dim % 2) break;
      return qpow(q, 2 * h * h);
    case Family::OPlus:
    case Family::OMinus:
    case Family::SOPlus:
    case Family::SOMinus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      if (dim < 4 || dim % 2) break;
      if (odd_q) return qpow(q, 2 * (h * h - h));
      if (f != Family::OPlus && f != Family::OMinus) break;
      // q^(2n^2-2n+1) (1 + 1/q -+ 1/q^n)
      const BigInt base = qpow(q, 2 * h * h - 2 * h) * (q + 1);
      const BigInt corr = qpow(q, 2 * h * h - 3 * h + 1);
      return f == Family::OPlus ? BigInt(base - corr) : BigInt(base + corr);
    }
    case Family::OOdd:
    case Family::SOOdd:
    case Family::OmegaOdd:
      if (dim < 3 || dim % 2 == 0 || !odd_q) break;
      return qpow(q, 2 * h * h);
    default:
      break;
  }
  throw InvalidArgument("unipotent_count: unsupported family/dimension/q combination");
}

std::string_view bound_scope_name(BoundScope s) {
  switch (s) {
    case BoundScope::AllElements:
      return "all";
    case BoundScope::PlusMinusOnePrimary:
      return "pm1-primary";
    case BoundScope::Unipotent:
      return "unipotent";
  }
  return "?";
}

Status check_lower_bound(const BigInt& actual, const BoundSpec& b) {
  const double a = actual.get_d();
  if (a >= b.nominal) return Status::Pass;
  if (a >= b.value) return Status::Inconclusive;
  return Status::Fail;
}

std::vector<BoundSpec> centralizer_bounds(Family f, int dim, std::uint64_t q) {
  check_q(q);
  const double Q = static_cast<double>(q);
  std::vector<BoundSpec> out;
  auto add = [&](double v, const char* tag, BoundScope s) {
    out.push_back(make_bound(f, dim, q, v, tag, s));
  };
  switch (f) {
    case Family::GL: {
      if (dim < 1) break;
      add(std::pow(Q, dim) * (1 - 1 / Q) / (std::numbers::e * (1 + log_base(dim + 1, Q))), "gl-all",
          BoundScope::AllElements);
      return out;
    }
    case Family::GU: {
      if (dim < 1) break;
      add(std::pow(Q, dim) *
              std::sqrt((1 - 1 / (Q * Q)) / (std::numbers::e * (2 + log_base(dim + 1, Q)))),
          "gu-all", BoundScope::AllElements);
      return out;
    }
    case Family::Sp: {
      if (dim < 2 || dim % 2) break;
      const int n = dim / 2;
      const double qn = std::pow(Q, n);
      add(qn * classical_root(n, Q), "sp-all", BoundScope::AllElements);
      add(qn, "sp-pm1-primary", BoundScope::PlusMinusOnePrimary);
      add(qn * (1 - std::pow(Q, -2) - std::pow(Q, -4)), "sp-pm1-primary-steinberg",
          BoundScope::PlusMinusOnePrimary);
      return out;
    }
    case Family::OPlus:
    case Family::OMinus: {
      if (dim < 4 || dim % 2) break;
      const int n = dim / 2;
      add(2 * std::pow(Q, n - 1) * classical_root(n, Q), "o-even-all", BoundScope::AllElements);
      if (q % 2) {
        add(std::pow(Q, n), "o-odd-char-pm1-primary", BoundScope::PlusMinusOnePrimary);
        add(std::pow(Q, n), "o-odd-char-pm1-primary-steinberg", BoundScope::PlusMinusOnePrimary);
      } else {
        add(2 * std::pow(Q, n - 1), "o-even-char-unipotent", BoundScope::Unipotent);
        add(std::pow(Q, n - 1) * (1 - std::pow(Q, -2) - std::pow(Q, -4)),
            "o-even-char-unipotent-steinberg", BoundScope::Unipotent);
      }
      return out;
    }
    case Family::SOPlus:
    case Family::SOMinus: {
      if (dim < 4 || dim % 2) break;
      const int n = dim / 2;
      add(std::pow(Q, n) * classical_root(n, Q), "so-even-all", BoundScope::AllElements);
      return out;
    }
    case Family::OOdd: {
      if (dim < 3 || dim % 2 == 0 || q % 2 == 0) break;
      const int n = dim / 2;
      add(std::pow(Q, n) * classical_root(n, Q), "o-odd-all", BoundScope::AllElements);
      add(std::pow(Q, n), "o-odd-char-pm1-primary", BoundScope::PlusMinusOnePrimary);
      add(std::pow(Q, n), "o-odd-char-pm1-primary-steinberg", BoundScope::PlusMinusOnePrimary);
      return out;
    }
    default:
      break;
  }
  throw InvalidArgument("no centralizer bound for family '" + std::string(family_name(f)) +
                        "' in dimension " + std::to_string(dim) + " at q = " + std::to_string(q));
}

BoundSpec min_centralizer_lower_bound(Family f, int dim, std::uint64_t q) {
  for (const auto& b : centralizer_bounds(f, dim, q)) {
    if (b.scope == BoundScope::AllElements) return b;
  }
  throw InvalidArgument("no whole-group centralizer bound for this family");
}

BoundSpec exceptional_centralizer_bound(ExceptionalType t, std::uint64_t q) {
  if (!exceptional_q_allowed(t, q)) throw InvalidArgument("q not allowed for this exceptional type");
  const double v = std::pow(static_cast<double>(q), exceptional_rank(t)) / 26.0;
  return make_bound(Family::Exceptional, exceptional_rank(t), q, v, "exceptional-all",
                    BoundScope::AllElements);
}

double rank_centralizer_bound(int r, std::uint64_t q, double A) {
  if (r < 1 || q < 2 || A <= 0) throw InvalidArgument("rank_centralizer_bound: bad arguments");
  const double Q = static_cast<double>(q);
  return std::pow(Q, r) / (A * std::min<double>(Q, r) * (1 + log_base(r, Q)));
}

void for_each_class_type(Family f, int n, std::uint64_t q,
                         const std::function<void(const ClassType&, const BigInt&)>& visit) {
  check_q(q);
  if (n < 1) throw InvalidArgument("class types need n >= 1");
  if (n > caps().partition_n) throw CapExceeded("class type dimension exceeds partition cap");
  const auto kinds = slot_kinds(f, n, q);
  Enumerator en{kinds, {}, visit, caps().class_types, 0, {}};
  en.by_size.resize(n + 1);
  for (int s = 1; s <= n; ++s) en.by_size[s] = partitions(s);
  en.run(0, n, BigInt(1));
}

ClassTypeSummary summarize_class_types(Family f, int n, std::uint64_t q) {
  ClassTypeSummary s;
  s.group_order = group_order(f, n, q);
  s.class_equation = 0;
  s.classes = 0;
  bool first = true;
  for_each_class_type(f, n, q, [&](const ClassType& ct, const BigInt& mult) {
    const BigInt c = f == Family::GL ? gl_centralizer_order(ct, q) : gu_centralizer_order(ct, q);
    ++s.shapes;
    s.classes += mult;
    s.class_equation += mult * exact_div(s.group_order, c, "class size");
    if (first || c < s.min_centralizer) {
      s.min_centralizer = c;
      s.argmin = ct;
      first = false;
    }
  });
  return s;
}

BigInt min_centralizer_exact(Family f, int n, std::uint64_t q) {
  if (f != Family::GL && f != Family::GU) {
    throw InvalidArgument("exact minimum centralizers are computed for gl and gu; use the oracle "
                          "for family '" +
                          std::string(family_name(f)) + "'");
  }
  return summarize_class_types(f, n, q).min_centralizer;
}

}  // namespace chev
