#include "chev/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>

#include "chev/bounds.hpp"
#include "chev/centralizer.hpp"
#include "chev/classcount.hpp"
#include "chev/config.hpp"
#include "chev/error.hpp"
#include "chev/numth.hpp"
#include "chev/oracle.hpp"
#include "chev/polycount.hpp"
#include "chev/series.hpp"

namespace chev {

namespace {

std::string gname(Family f, int dim, std::uint64_t q) {
  std::string s = std::string(family_name(f)) + "(" + std::to_string(dim);
  if (q) s += "," + std::to_string(q);
  return s + ")";
}

std::string u64(std::uint64_t x) { return std::to_string(x); }

// Realized groups and their class data are shared between suites.
struct Realized {
  OracleGroup group;
  ConjugacyData data;
};

const Realized& realized(Family f, int dim, unsigned q) {
  static std::mutex mu;
  static std::map<std::tuple<Family, int, unsigned>, std::unique_ptr<Realized>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{f, dim, q}];
  if (!slot) {
    OracleGroup g = realize_group(f, dim, q);
    ConjugacyData d = conjugacy_data(g);
    slot = std::make_unique<Realized>(Realized{std::move(g), std::move(d)});
  }
  return *slot;
}

std::uint64_t min_centralizer(const ConjugacyData& d) {
  std::uint64_t m = UINT64_MAX;
  for (const auto& c : d.classes) m = std::min(m, c.centralizer);
  return m;
}

FactorAtom fa(int sign, int t_slope, int t_offset, int exponent, int q_slope = 0, int q_offset = 0) {
  FactorAtom a;
  a.sign = sign;
  a.q_slope = q_slope;
  a.q_offset = q_offset;
  a.t_slope = t_slope;
  a.t_offset = t_offset;
  a.exponent = exponent;
  return a;
}

// prod_i 1 / ((1 - t^i)(1 - q t^i))
FactorSpec andrews_denominator() {
  FactorSpec s;
  s.add(fa(-1, 1, 0, -1)).add(fa(-1, 1, 0, -1, 0, 1));
  return s;
}

std::string first_difference(const IntSeries& a, const IntSeries& b) {
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i] != b[i]) {
      return "t^" + std::to_string(i) + ": " + a[i].get_str() + " vs " + b[i].get_str();
    }
  }
  return {};
}

void add_series_eq(VerifyReport& rep, const std::string& claim, const std::string& params,
                   const IntSeries& a, const IntSeries& b) {
  const std::string diff = first_difference(a, b);
  rep.add(claim, params, diff.empty(),
          diff.empty() ? "equal to t^" + std::to_string(a.order()) : "first difference " + diff);
}

}  // namespace

VerifyReport identities_suite(int order, const std::vector<std::uint64_t>& qs) {
  VerifyReport rep("identities");
  const std::string ord = "order=" + std::to_string(order);
  const IntegerRing Z{0};

  {
    FactorSpec euler;
    euler.add(fa(-1, 1, 0, 1));
    add_series_eq(rep, "series.pentagonal", ord, product_factors(euler, order, Z),
                  pentagonal_series(order));
    FactorSpec gauss;
    gauss.add(fa(-1, 2, 0, 1)).add(fa(-1, 2, -1, -1));
    add_series_eq(rep, "series.gauss-triangular", ord, product_factors(gauss, order, Z),
                  gauss_triangular_series(order));
    FactorSpec jacobi;
    jacobi.add(fa(-1, 2, 0, 1)).add(fa(1, 2, -1, 2));
    add_series_eq(rep, "series.jacobi-squares", ord, product_factors(jacobi, order, Z),
                  jacobi_square_series(order));
  }

  for (const auto q : qs) {
    rep.merge(verify_polycount_identities(q, order));

    // The sum forms of the symplectic (even q), orthogonal (even q) and odd
    // dimensional SO generating functions against their product forms. These
    // are identities in t for every q.
    const IntegerRing R{BigInt(static_cast<unsigned long>(q))};
    const std::string p = "q=" + u64(q) + " " + ord;
    const IntSeries den = product_factors(andrews_denominator(), order, R);
    add_series_eq(rep, "gf.sp-even-sum-form", p, mul(even_triangular_series(order), den),
                  product_factors(gf::sp_even(), order, R));
    add_series_eq(rep, "gf.o-even-sum-form", p, mul(jacobi_square_series(order), den),
                  product_factors(gf::o_sum_even(), order, R));
    const IntSeries tri = even_triangular_series(order);
    add_series_eq(rep, "gf.so-odd-dim-sum-form", p,
                  mul(mul(tri, tri), product_factors(gf::so_odd_dim_tail(), order, R)),
                  product_factors(gf::so_odd_dim(), order, R));
  }

  // Extraction in Z[q] then evaluation equals extraction at the number q,
  // first for every generating function, then for the class numbers that are
  // integer-coefficient polynomials.
  const int sym_n = 20;
  const std::vector<std::uint64_t> sym_qs{2, 3, 4, 5};
  const std::pair<const char*, FactorSpec> gfs[] = {
      {"gl", gf::gl()},
      {"gu", gf::gu()},
      {"sp-odd", gf::sp_odd()},
      {"sp-even", gf::sp_even()},
      {"o-sum-odd", gf::o_sum_odd()},
      {"o-sum-even", gf::o_sum_even()},
      {"o-diff", gf::o_diff()},
      {"so-split-odd", gf::so_split_odd()},
      {"so-diff-odd", gf::so_diff_odd()},
      {"so-odd-dim", gf::so_odd_dim()},
      {"so-odd-dim-tail", gf::so_odd_dim_tail()},
      {"so-even-p", gf::so_even_p()},
      {"so-even-q", gf::so_even_q()},
      {"so-even-diff", gf::so_even_diff()},
      {"omega-s1", gf::omega_s1()},
      {"omega-s3", gf::omega_s3()},
      {"omega-s4", gf::omega_s4()},
      {"omega-odd-s5", gf::omega_odd_s5()},
  };
  for (const auto& [name, spec] : gfs) {
    const PolySeries poly = product_factors(spec, 2 * sym_n + 1, PolyRing{});
    bool ok = true;
    std::string witness;
    for (const auto q : sym_qs) {
      const BigInt qq(static_cast<unsigned long>(q));
      const std::string diff =
          first_difference(evaluate(poly, qq), product_factors(spec, 2 * sym_n + 1, IntegerRing{qq}));
      if (!diff.empty() && ok) {
        ok = false;
        witness = "q=" + u64(q) + " " + diff;
      }
    }
    rep.add("series.extract-evaluate-commute", std::string("gf ") + name + " to t^" +
                std::to_string(2 * sym_n + 1),
            ok, ok ? "q in {2,3,4,5}" : witness);
  }

  struct SymCase {
    Family f;
    bool odd_dim;
    int min_n;
    bool odd_q_only;
  };
  const SymCase cases[] = {
      {Family::GL, false, 1, false},      {Family::GU, false, 1, false},
      {Family::Sp, false, 1, false},      {Family::SOPlus, false, 2, false},
      {Family::SOMinus, false, 2, false}, {Family::SOOdd, true, 1, true},
      {Family::OOdd, true, 1, true},
  };
  for (const auto& c : cases) {
    const bool any_parity = c.f == Family::GL || c.f == Family::GU;
    for (const Parity parity : {Parity::Odd, Parity::Even}) {
      if (parity == Parity::Even && (c.odd_q_only || any_parity)) continue;
      bool ok = true;
      std::string witness;
      int checked = 0;
      for (int n = c.min_n; n <= sym_n; ++n) {
        const int dim = any_parity ? n : 2 * n + (c.odd_dim ? 1 : 0);
        const QPoly poly = k_symbolic(c.f, dim, parity);
        for (const auto q : sym_qs) {
          if (!any_parity && (q % 2 == 1) != (parity == Parity::Odd)) continue;
          GroupSpec g;
          g.family = c.f;
          g.n = dim;
          g.q = q;
          const BigInt numeric = class_count(g).value;
          const BigInt symbolic = poly.eval(BigInt(static_cast<unsigned long>(q)));
          ++checked;
          if (numeric != symbolic && ok) {
            ok = false;
            witness = "dim=" + std::to_string(dim) + " q=" + u64(q) + ": " + symbolic.get_str() +
                      " vs " + numeric.get_str();
          }
        }
      }
      rep.add("series.extract-evaluate-commute",
              std::string(family_name(c.f)) +
                  (any_parity ? "" : parity == Parity::Odd ? " odd q" : " even q") +
                  " n<=" + std::to_string(sym_n),
              ok, ok ? std::to_string(checked) + " values agree" : witness);
    }
  }
  rep.sort();
  return rep;
}

VerifyReport oracle_class_suite() {
  VerifyReport rep("oracle");
  struct Fixture {
    Family f;
    int dim;
    unsigned q;
    long expected;  // -1: no frozen value
  };
  const Fixture fixtures[] = {
      {Family::GL, 2, 2, 3},        {Family::GL, 2, 3, 8},        {Family::GL, 3, 2, 6},
      {Family::GL, 2, 4, 15},       {Family::GU, 2, 2, 9},        {Family::SL, 2, 3, 7},
      {Family::SL, 2, 5, 9},        {Family::PSL, 2, 5, 5},       {Family::Sp, 4, 2, 11},
      {Family::Sp, 4, 3, 34},       {Family::OPlus, 4, 2, 9},     {Family::OMinus, 4, 2, 7},
      {Family::OOdd, 3, 3, 10},     {Family::SOOdd, 3, 3, 5},     {Family::SOPlus, 4, 3, 20},
      {Family::SOMinus, 4, 3, 14},  {Family::OmegaOdd, 5, 3, 20}, {Family::OmegaPlus, 4, 5, 41},
      {Family::OmegaMinus, 4, 5, 15}, {Family::GL, 3, 3, -1},     {Family::GU, 3, 2, -1},
      {Family::GU, 2, 3, -1},       {Family::SU, 2, 3, -1},       {Family::SU, 3, 2, -1},
      {Family::PGL, 2, 3, -1},      {Family::PGL, 2, 5, -1},      {Family::PSL, 2, 7, -1},
      {Family::PGU, 2, 3, -1},      {Family::PSU, 3, 2, -1},      {Family::SL, 3, 3, -1},
      {Family::OPlus, 4, 3, -1},    {Family::OMinus, 4, 3, -1},   {Family::SOPlus, 4, 2, -1},
      {Family::SOMinus, 4, 2, -1},  {Family::OOdd, 5, 3, -1},     {Family::SOOdd, 5, 3, -1},
      {Family::OmegaPlus, 4, 3, -1}, {Family::OmegaMinus, 4, 3, -1},
  };
  const auto projective = [](Family f) {
    return f == Family::PGL || f == Family::PSL || f == Family::PGU || f == Family::PSU;
  };
  for (const auto& fx : fixtures) {
    GroupSpec g;
    g.family = fx.f;
    g.n = fx.dim;
    g.q = fx.q;
    const BigInt formula = class_count(g).value;
    std::size_t k = 0;
    if (projective(fx.f)) {
      k = oracle_class_count(fx.f, fx.dim, fx.q);
    } else {
      const auto& r = realized(fx.f, fx.dim, fx.q);
      k = r.data.classes.size();
      const BigInt order = group_order(fx.f, fx.dim, fx.q);
      rep.add("oracle.group-order", gname(fx.f, fx.dim, fx.q), order == r.group.order(),
              "enumerated=" + u64(r.group.order()) + " formula=" + order.get_str());
      std::uint64_t total = 0;
      bool sizes_ok = true;
      for (const auto& c : r.data.classes) {
        total += c.size;
        sizes_ok = sizes_ok && c.size * c.centralizer == r.group.order();
      }
      rep.add("oracle.class-sizes", gname(fx.f, fx.dim, fx.q), sizes_ok && total == r.group.order(),
              "sum of class sizes=" + u64(total));
      if (r.group.order() <= caps().burnside_order) {
        const auto b = burnside_class_count(r.group);
        rep.add("oracle.burnside", gname(fx.f, fx.dim, fx.q), b == k,
                "commuting pairs / |G| = " + u64(b) + ", orbits = " + u64(k));
      }
    }
    const bool fixture_ok = fx.expected < 0 || formula == fx.expected;
    rep.add("oracle.class-count", gname(fx.f, fx.dim, fx.q), formula == k && fixture_ok,
            "formula=" + formula.get_str() + " oracle=" + u64(k) +
                (fx.expected >= 0 ? " fixture=" + std::to_string(fx.expected) : ""));
  }

  // Symmetric and alternating groups, and two exceptional isomorphisms.
  for (int m = 3; m <= 6; ++m) {
    const auto sa = k_sym_alt(m);
    const auto& s = realized(Family::SymmetricGroup, m, 0);
    const auto& a = realized(Family::AlternatingGroup, m, 0);
    rep.add("oracle.class-count", "sym(" + std::to_string(m) + ")", sa.sym == s.data.classes.size(),
            "formula=" + sa.sym.get_str() + " oracle=" + u64(s.data.classes.size()));
    rep.add("oracle.class-count", "alt(" + std::to_string(m) + ")", sa.alt == a.data.classes.size(),
            "formula=" + sa.alt.get_str() + " oracle=" + u64(a.data.classes.size()));
  }
  rep.add("oracle.isomorphism-crosscheck", "sp(4,2) = sym(6)", k_sp(4, 2) == k_sym_alt(6).sym,
          "k(Sp(4,2))=" + k_sp(4, 2).get_str() + " p(6)=" + k_sym_alt(6).sym.get_str());
  rep.add("oracle.isomorphism-crosscheck", "o-minus(4,2) = sym(5)",
          k_o_even(4, 2).minus == k_sym_alt(5).sym,
          "k(O-(4,2))=" + k_o_even(4, 2).minus.get_str() + " p(5)=" + k_sym_alt(5).sym.get_str());

  // O(2n+1,q) has twice the classes of SO(2n+1,q).
  for (const int dim : {3, 5}) {
    const auto& o = realized(Family::OOdd, dim, 3);
    const auto& so = realized(Family::SOOdd, dim, 3);
    rep.add("oracle.o-odd-dim-double", "dim=" + std::to_string(dim) + " q=3",
            o.data.classes.size() == 2 * so.data.classes.size(),
            "k(O)=" + u64(o.data.classes.size()) + " k(SO)=" + u64(so.data.classes.size()));
  }

  // Groups between SL and GL.
  for (const auto& [n, q, j] : {std::tuple{2, 5u, 2ul}, std::tuple{2, 7u, 2ul}, std::tuple{2, 7u, 3ul},
                                std::tuple{3, 4u, 3ul}}) {
    const auto& gl = realized(Family::GL, n, q);
    const auto& s = gl.group.space();
    const auto& F = s.field();
    // det lies in the index-j subgroup of F_q^*: det^((q-1)/j) = 1
    const OracleGroup h = subgroup_where(
        gl.group, [&](const Mat& x) { return F.pow(s.det(x), (q - 1) / j) == 1; }, "between");
    const std::size_t k = conjugacy_data(h).classes.size();
    const BigInt formula = k_between_sl_gl(n, q, j);
    rep.add("oracle.class-count",
            "between-sl-gl(" + std::to_string(n) + "," + u64(q) + ",j=" + u64(j) + ")",
            formula == k && h.order() * j == gl.group.order(),
            "formula=" + formula.get_str() + " oracle=" + u64(k) + " |H|=" + u64(h.order()));
  }

  // Isometry groups: backtracking enumeration against generated closure.
  struct FormCase {
    FormKind kind;
    FormType type;
    int dim;
    unsigned q;
    Family f;
  };
  const FormCase forms[] = {
      {FormKind::Alternating, FormType::None, 4, 2, Family::Sp},
      {FormKind::Alternating, FormType::None, 4, 3, Family::Sp},
      {FormKind::Alternating, FormType::None, 2, 5, Family::Sp},
      {FormKind::Quadratic, FormType::Plus, 4, 2, Family::OPlus},
      {FormKind::Quadratic, FormType::Minus, 4, 2, Family::OMinus},
      {FormKind::Quadratic, FormType::Plus, 6, 2, Family::OPlus},
      {FormKind::SymmetricBilinear, FormType::Odd, 3, 3, Family::OOdd},
      {FormKind::SymmetricBilinear, FormType::Plus, 4, 3, Family::OPlus},
      {FormKind::SymmetricBilinear, FormType::Minus, 4, 3, Family::OMinus},
      {FormKind::SymmetricBilinear, FormType::Odd, 5, 3, Family::OOdd},
      {FormKind::SymmetricBilinear, FormType::Plus, 4, 5, Family::OPlus},
  };
  for (const auto& fc : forms) {
    const FormSpec form = standard_form(fc.kind, fc.type, fc.dim, fc.q);
    const OracleGroup a = isometry_group(form);
    const OracleGroup b = isometry_group_generated(form);
    bool inside = true;
    for (const auto& x : b.elements()) inside = inside && a.contains(x);
    // Reflections generate the whole orthogonal group except for O+(4,2),
    // where they give a subgroup of index 2.
    const bool exception = fc.kind == FormKind::Quadratic && fc.type == FormType::Plus &&
                           fc.dim == 4 && fc.q == 2;
    const std::size_t expected_index = exception ? 2 : 1;
    const BigInt order = group_order(fc.f, fc.dim, fc.q);
    rep.add("oracle.isometry-generated-vs-enumerated", gname(fc.f, fc.dim, fc.q),
            inside && b.order() * expected_index == a.order() && order == a.order(),
            "enumerated=" + u64(a.order()) + " generated=" + u64(b.order()) +
                " formula=" + order.get_str());
  }

  // An SO-class is a whole O-class exactly when some Jordan block for an
  // eigenvalue +-1 has odd size.
  for (const auto& [f, dim] : {std::pair{Family::OPlus, 4}, std::pair{Family::OMinus, 4},
                               std::pair{Family::OOdd, 3}, std::pair{Family::OOdd, 5}}) {
    const auto& o = realized(f, dim, 3);
    const OracleGroup so = determinant_kernel(o.group);
    const ConjugacyData sd = conjugacy_data(so);
    const auto& s = o.group.space();
    const auto& F = s.field();
    std::size_t agree = 0, split = 0;
    std::string witness;
    for (const auto& c : sd.classes) {
      const Mat& x = so.elements()[c.rep];
      const auto& oc = o.data.classes[o.data.class_of[*o.group.index_of(x)]];
      const bool whole = oc.centralizer == 2 * c.centralizer;
      bool odd_block = false;
      for (const FqField::Elem lambda : {FqField::Elem(1), F.neg(1)}) {
        for (int b : jordan_blocks(s, x, lambda)) odd_block = odd_block || (b % 2 == 1);
      }
      if (!whole) ++split;
      if (whole == odd_block) {
        ++agree;
      } else if (witness.empty()) {
        witness = "disagreement at " + s.to_string(x);
      }
    }
    rep.add("oracle.so-class-splitting", gname(f, dim, 3), agree == sd.classes.size(),
            witness.empty() ? u64(sd.classes.size()) + " SO-classes, " + u64(split) +
                                  " lie in O-classes that split"
                            : witness);
  }
  rep.sort();
  return rep;
}

VerifyReport centralizer_suite() {
  VerifyReport rep("centralizer");
  rep.note("closed-form bounds are compared after lowering by a 1e-9 relative margin");

  // f(lambda) >= q^|lambda| (1 - 1/q), equality exactly at one-row partitions.
  for (const std::uint64_t q : {2, 3, 4, 5}) {
    bool ok = true;
    std::string witness;
    std::size_t count = 0;
    for (int m = 1; m <= 20; ++m) {
      const Rational floor_value = Rational(pow(BigInt(static_cast<unsigned long>(q)), m)) *
                                   Rational(BigInt(static_cast<unsigned long>(q - 1)),
                                            BigInt(static_cast<unsigned long>(q)));
      for (const auto& lambda : partitions(m)) {
        ++count;
        const Rational f = f_monotone(lambda, q);
        const bool one_row = lambda.length() == 1;
        if (f < floor_value || (f == floor_value) != one_row) {
          if (ok) witness = "lambda=" + lambda.to_string() + " f=" + f.get_str();
          ok = false;
        }
      }
    }
    rep.add("centralizer.partition-monotone", "q=" + u64(q) + " |lambda|<=20", ok,
            ok ? u64(count) + " partitions" : witness);
  }

  // (1 - 1/s)^s >= e^-(1 + 1/s)
  {
    bool ok = true;
    std::string witness;
    for (int s = 2; s <= 10000; ++s) {
      const long double lhs = s * std::log1p(-1.0L / s);
      const long double rhs = -(1.0L + 1.0L / s);
      if (lhs < rhs) {
        ok = false;
        witness = "s=" + std::to_string(s);
        break;
      }
    }
    rep.add("centralizer.crude-exponential", "2<=s<=10000", ok, witness);
  }

  // Class equations and exact minima for GL and GU.
  auto class_types = [&](Family f, int n_max, std::vector<std::uint64_t> qs) {
    for (const auto q : qs) {
      for (int n = 1; n <= n_max; ++n) {
        const auto sum = summarize_class_types(f, n, q);
        const BigInt k = f == Family::GL ? k_gl(n, q) : k_gu(n, q);
        const std::string p = gname(f, n, q);
        rep.add("centralizer.class-equation", p, sum.class_equation == sum.group_order,
                "sum |G|/|C| = " + sum.class_equation.get_str() +
                    " |G| = " + sum.group_order.get_str());
        rep.add("centralizer.class-type-count", p, sum.classes == k,
                "classes=" + sum.classes.get_str() + " k=" + k.get_str() +
                    " shapes=" + u64(sum.shapes));
        const BoundSpec b = min_centralizer_lower_bound(f, n, q);
        rep.add({"centralizer.min-vs-bound", p + " " + b.tag, check_lower_bound(sum.min_centralizer, b),
                 "min=" + sum.min_centralizer.get_str() + " bound=" + std::to_string(b.nominal)});
      }
    }
  };
  class_types(Family::GL, 5, {2, 3, 4});
  class_types(Family::GU, 4, {2, 3});

  // Exact minima from class data against enumeration.
  for (const auto& [f, n, q] : {std::tuple{Family::GL, 2, 2u}, std::tuple{Family::GL, 2, 3u},
                                std::tuple{Family::GL, 3, 2u}, std::tuple{Family::GU, 2, 2u},
                                std::tuple{Family::GU, 3, 2u}}) {
    const BigInt exact = min_centralizer_exact(f, n, q);
    const auto& r = realized(f, n, q);
    const std::uint64_t m = min_centralizer(r.data);
    rep.add("centralizer.min-exact-vs-oracle", gname(f, n, q), exact == m,
            "class types=" + exact.get_str() + " oracle=" + u64(m));
  }

  // Oracle groups against every bound, restricted to the bound's scope.
  for (const auto& [f, dim, q] :
       {std::tuple{Family::Sp, 4, 2u}, std::tuple{Family::Sp, 4, 3u},
        std::tuple{Family::OPlus, 4, 2u}, std::tuple{Family::OMinus, 4, 2u},
        std::tuple{Family::OOdd, 3, 3u}, std::tuple{Family::OPlus, 4, 3u},
        std::tuple{Family::OMinus, 4, 3u}, std::tuple{Family::SOPlus, 4, 3u},
        std::tuple{Family::SOMinus, 4, 3u}, std::tuple{Family::OOdd, 5, 3u}}) {
    const auto& r = realized(f, dim, q);
    const auto& s = r.group.space();
    const Mat zero{};
    auto pm1_primary = [&](const Mat& x) {
      const Mat one = s.identity();
      const Mat minus = s.scalar(s.field().neg(1));
      return s.pow(s.sub(x, one), dim) == zero || s.pow(s.sub(x, minus), dim) == zero;
    };
    for (const auto& b : centralizer_bounds(f, dim, q)) {
      std::uint64_t m = UINT64_MAX;
      for (const auto& c : r.data.classes) {
        const bool in_scope =
            b.scope == BoundScope::AllElements ||
            (b.scope == BoundScope::Unipotent && c.unipotent) ||
            (b.scope == BoundScope::PlusMinusOnePrimary && pm1_primary(r.group.elements()[c.rep]));
        if (in_scope) m = std::min(m, c.centralizer);
      }
      rep.add({"centralizer.oracle-vs-bound", gname(f, dim, q) + " " + b.tag,
               check_lower_bound(BigInt(static_cast<unsigned long>(m)), b),
               std::string(bound_scope_name(b.scope)) + " min=" + u64(m) +
                   " bound=" + std::to_string(b.nominal)});
    }
    const int rank = dim / 2;
    rep.note("rank-bound ratio (A=1, reported only) " + gname(f, dim, q) + ": min centralizer " +
             u64(min_centralizer(r.data)) + " / " +
             std::to_string(rank_centralizer_bound(rank, q, 1.0)));
  }
  rep.sort();
  return rep;
}

VerifyReport unipotent_suite() {
  VerifyReport rep("unipotent");
  struct Case {
    Family f;
    int dim;
    unsigned q;
    long expected;
  };
  const Case cases[] = {
      {Family::Sp, 4, 3, 6561},  {Family::OPlus, 4, 2, 40}, {Family::OMinus, 4, 2, 56},
      {Family::Sp, 4, 2, 256},   {Family::OOdd, 3, 3, 9},   {Family::OPlus, 4, 3, 81},
      {Family::OMinus, 4, 3, 81}, {Family::OOdd, 5, 3, 6561}, {Family::GL, 2, 3, 9},
      {Family::GL, 3, 2, 64},    {Family::GU, 2, 2, 4},     {Family::GU, 3, 2, 64},
  };
  for (const auto& c : cases) {
    const auto& r = realized(c.f, c.dim, c.q);
    std::uint64_t count = 0;
    for (const auto& cl : r.data.classes) {
      if (cl.unipotent) count += cl.size;
    }
    const BigInt formula = unipotent_count(c.f, c.dim, c.q);
    rep.add("unipotent.count", gname(c.f, c.dim, c.q), formula == count && formula == c.expected,
            "formula=" + formula.get_str() + " oracle=" + u64(count) +
                " fixture=" + std::to_string(c.expected));
  }
  rep.sort();
  return rep;
}

VerifyReport structure_suite() {
  VerifyReport rep("structure");

  struct CosetCase {
    std::string name;
    const OracleGroup* g;
    std::vector<std::uint64_t> primes;
  };
  std::vector<CosetCase> cases;
  for (int m = 4; m <= 6; ++m) {
    const auto& s = realized(Family::SymmetricGroup, m, 0).group;
    cases.push_back({"sym(" + std::to_string(m) + ")/alt(" + std::to_string(m) + ")", &s,
                     prime_factors(s.order())});
  }
  const auto& gl23 = realized(Family::GL, 2, 3).group;
  const auto& gl25 = realized(Family::GL, 2, 5).group;
  cases.push_back({"gl(2,3)/sl(2,3)", &gl23, {2, 3}});
  cases.push_back({"gl(2,5)/sl(2,5)", &gl25, {2, 3, 5}});
  cases.push_back({"gl(2,5)/sl(2,5) 2-elements", &gl25, {2}});
  for (const auto& c : cases) {
    // Alt(m) is the determinant kernel of the permutation matrices over F_3.
    const OracleGroup n = determinant_kernel(*c.g);
    const auto d = coset_class_distribution(*c.g, n, c.primes);
    bool part1 = d.cyclic, part2 = d.cyclic;
    std::string per_coset;
    for (std::size_t i = 0; i < d.index; ++i) {
      part1 = part1 && d.single_orbit_classes[i] == d.alpha;
      if (d.generating[i]) part2 = part2 && d.classes_in_coset[i] == d.alpha;
      per_coset += (i ? "," : "") + u64(d.single_orbit_classes[i]) + "/" +
                   u64(d.classes_in_coset[i]) + (d.generating[i] ? "*" : "");
    }
    std::string pi;
    for (auto p : c.primes) pi += (pi.empty() ? "" : ",") + u64(p);
    const std::string params = c.name + " pi={" + pi + "}";
    const std::string witness = "alpha=" + u64(d.alpha) + " single-orbit/all per coset " +
                                per_coset + " (* generates the quotient)";
    rep.add("coset.single-orbit-classes", params, part1, witness);
    rep.add("coset.generating-coset-classes", params, part2, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int m = 4; m <= 60; ++m) {
      const auto sa = k_sym_alt(m);
      if (!(sa.alt < sa.sym)) {
        ok = false;
        witness = "m=" + std::to_string(m) + " k(A)=" + sa.alt.get_str() + " k(S)=" + sa.sym.get_str();
        break;
      }
    }
    rep.add("sym-alt.alternating-fewer", "4<=m<=60", ok,
            ok ? "k(A_60)=" + k_sym_alt(60).alt.get_str() + " k(S_60)=" + k_sym_alt(60).sym.get_str()
               : witness);
  }

  // Semisimple classes of simply connected groups number q^rank.
  for (const auto& [f, dim, q, rank] :
       {std::tuple{Family::Sp, 4, 3u, 2}, std::tuple{Family::Sp, 4, 2u, 2},
        std::tuple{Family::SL, 2, 3u, 1}, std::tuple{Family::SL, 2, 5u, 1},
        std::tuple{Family::SL, 3, 2u, 2}, std::tuple{Family::SL, 3, 3u, 2},
        std::tuple{Family::SU, 3, 2u, 2}, std::tuple{Family::Sp, 2, 7u, 1}}) {
    const auto& r = realized(f, dim, q);
    std::size_t ss = 0;
    for (const auto& c : r.data.classes) ss += c.semisimple;
    const BigInt qr = pow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(rank));
    rep.add("semisimple.simply-connected-count", gname(f, dim, q), qr == ss,
            "semisimple classes=" + u64(ss) + " q^r=" + qr.get_str() +
                " k=" + u64(r.data.classes.size()));
  }
  rep.sort();
  return rep;
}

VerifyReport derangement_suite() {
  VerifyReport rep("derangement");
  struct Pair {
    std::string name;
    const OracleGroup* g;
    std::function<bool(const Mat&)> in_h;
    std::optional<Rational> expected;
  };
  std::vector<Pair> pairs;
  for (int m = 3; m <= 6; ++m) {
    const auto& s = realized(Family::SymmetricGroup, m, 0).group;
    const int last = m - 1;
    std::optional<Rational> e;
    if (m == 3) e = Rational(1, 3);
    if (m == 5) e = Rational(11, 30);
    pairs.push_back({"sym(" + std::to_string(m) + ") on points", &s,
                     [last](const Mat& x) { return x.at(last, last) == 1; }, e});
  }
  {
    const auto& a5 = realized(Family::AlternatingGroup, 5, 0).group;
    pairs.push_back({"alt(5) on points", &a5, [](const Mat& x) { return x.at(4, 4) == 1; }, {}});
    const auto& s4 = realized(Family::SymmetricGroup, 4, 0).group;
    pairs.push_back({"sym(4) on alt(4) cosets", &s4,
                     [&s4](const Mat& x) { return s4.space().det(x) == 1; }, Rational(1, 2)});
    pairs.push_back({"sym(4) trivial action", &s4, [](const Mat&) { return true; }, Rational(0)});
  }
  for (const unsigned q : {3u, 5u}) {
    const auto& gl = realized(Family::GL, 2, q).group;
    pairs.push_back({"gl(2," + u64(q) + ") on lines", &gl,
                     [](const Mat& x) { return x.at(1, 0) == 0; }, {}});
  }
  {
    const auto& sp = realized(Family::Sp, 4, 2).group;
    pairs.push_back({"sp(4,2) on nonzero vectors", &sp,
                     [](const Mat& x) {
                       return x.at(0, 0) == 1 && x.at(1, 0) == 0 && x.at(2, 0) == 0 &&
                              x.at(3, 0) == 0;
                     },
                     {}});
  }

  for (const auto& p : pairs) {
    const OracleGroup h = subgroup_where(*p.g, p.in_h, "h");
    const Rational delta = derangement_proportion(*p.g, h);
    const std::uint64_t index = p.g->order() / h.order();
    const std::string params = p.name + " |Omega|=" + u64(index);
    if (p.expected) {
      rep.add("derangement.fixture", params, delta == *p.expected,
              "delta=" + delta.get_str() + " expected=" + p.expected->get_str());
    }
    if (index > 1) {
      rep.add("derangement.at-least-one-over-index", params,
              delta >= Rational(1, static_cast<unsigned long>(index)), "delta=" + delta.get_str());
    }
    const auto gdata = conjugacy_data(*p.g);
    const BigInt kM(static_cast<unsigned long>(conjugacy_data(h).classes.size()));
    const BigInt min_cent(static_cast<unsigned long>(min_centralizer(gdata)));
    const auto ub = derangement_union_bound(kM, min_cent, BigInt(static_cast<unsigned long>(p.g->order())));
    // 1 - delta is the union of the conjugates of H.
    rep.add("derangement.union-bound-sound", params,
            ub.union_bound >= 1 - delta && ub.derangement_bound <= delta,
            "k(H)=" + kM.get_str() + " min|C|=" + min_cent.get_str() +
                " union bound=" + ub.union_bound.get_str() + " derangement bound=" +
                ub.derangement_bound.get_str() + " actual=" + delta.get_str());
  }
  rep.sort();
  return rep;
}

std::vector<std::string> suite_names() {
  return {"identities", "bounds", "limits", "polynomiality", "centralizer", "oracle", "all"};
}

VerifyReport run_suite(std::string_view name, const SuiteOptions& opts) {
  auto qs_upto = [&](std::vector<std::uint64_t> qs) {
    std::erase_if(qs, [&](std::uint64_t q) { return q > opts.max_q; });
    return qs;
  };
  auto n_or = [&](int d) { return opts.max_n > 0 ? opts.max_n : d; };
  if (name == "identities") return identities_suite(n_or(60), qs_upto({2, 3, 4, 5, 7, 9}));
  if (name == "bounds") {
    InequalityGrid grid;
    grid.n_max = n_or(30);
    grid.qs = qs_upto(grid.qs);
    return check_inequalities(grid);
  }
  if (name == "limits") return check_limits(n_or(30));
  if (name == "polynomiality") return check_polynomiality(std::min(n_or(12), 12));
  if (name == "centralizer") return centralizer_suite();
  if (name == "oracle") {
    VerifyReport rep("oracle");
    rep.merge(oracle_class_suite());
    rep.merge(unipotent_suite());
    rep.merge(structure_suite());
    rep.merge(derangement_suite());
    rep.sort();
    return rep;
  }
  if (name == "all") {
    VerifyReport rep("all");
    for (const auto& s : suite_names()) {
      if (s != "all") rep.merge(run_suite(s, opts));
    }
    rep.sort();
    return rep;
  }
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

}  // namespace chev
