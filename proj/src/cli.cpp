#include "chev/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "chev/bounds.hpp"
#include "chev/centralizer.hpp"
#include "chev/classcount.hpp"
#include "chev/error.hpp"
#include "chev/oracle.hpp"
#include "chev/suites.hpp"
#include "json.hpp"

namespace chev {

namespace {

using Json = nlohmann::ordered_json;

std::string str(const BigInt& x) { return x.get_str(); }

// Polynomial coefficients: numbers while they fit in 64 bits, decimal
// strings beyond.
Json coeff_json(const BigInt& c) {
  if (fits_int64(c)) return to_int64(c);
  return c.get_str();
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_row_array(const Json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_rows_table(const Json& rows, std::ostream& out) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& k : keys) {
    std::size_t w = k.size();
    for (const auto& r : rows) w = std::max(w, scalar_text(r[k]).size());
    width.push_back(w);
  }
  auto cell = [&](const std::string& s, std::size_t w) { out << s << std::string(w - s.size() + 2, ' '); };
  for (std::size_t i = 0; i < keys.size(); ++i) cell(keys[i], width[i]);
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) cell(scalar_text(r[keys[i]]), width[i]);
    out << "\n";
  }
}

void print_rows_csv(const Json& rows, std::ostream& out) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_field(keys[i]);
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_field(scalar_text(r[keys[i]]));
    out << "\n";
  }
}

// A command result: the command name, its parameters and the result fields.
// JSON output is one flat object with "command" and "params" first.
struct Record {
  std::string command;
  Json params = Json::object();
  Json result = Json::object();

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["params"] = params;
    for (const auto& [k, v] : result.items()) j[k] = v;
    return j;
  }
};

void print_record(const Record& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.to_json().dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, Json>> scalars;
  std::vector<std::pair<std::string, Json>> tables;
  for (const auto& [k, v] : r.result.items()) {
    (is_row_array(v) ? tables : scalars).emplace_back(k, v);
  }
  if (format == "csv") {
    if (!scalars.empty()) {
      for (std::size_t i = 0; i < scalars.size(); ++i) out << (i ? "," : "") << csv_field(scalars[i].first);
      out << "\n";
      for (std::size_t i = 0; i < scalars.size(); ++i) {
        out << (i ? "," : "") << csv_field(scalar_text(scalars[i].second));
      }
      out << "\n";
    }
    for (const auto& [k, v] : tables) print_rows_csv(v, out);
    return;
  }
  std::size_t w = 0;
  for (const auto& [k, v] : scalars) w = std::max(w, k.size());
  for (const auto& [k, v] : scalars) {
    out << k << std::string(w - k.size() + 2, ' ') << scalar_text(v) << "\n";
  }
  for (const auto& [k, v] : tables) {
    out << "\n" << k << ":\n";
    print_rows_table(v, out);
  }
}

struct UsageError : Error {
  using Error::Error;
};

// "o", "so" and "omega" take --type; every other family is named directly.
Family resolve_family(const std::string& name, const std::string& type) {
  static const std::map<std::string, std::pair<Family, Family>> typed{
      {"o", {Family::OPlus, Family::OMinus}},
      {"so", {Family::SOPlus, Family::SOMinus}},
      {"omega", {Family::OmegaPlus, Family::OmegaMinus}},
  };
  if (auto it = typed.find(name); it != typed.end()) {
    if (type == "+" || type == "plus") return it->second.first;
    if (type == "-" || type == "minus") return it->second.second;
    throw UsageError("family '" + name + "' needs --type plus or --type minus");
  }
  if (auto f = parse_family(name)) return *f;
  std::string known;
  for (auto f : all_families()) known += std::string(known.empty() ? "" : ", ") + std::string(family_name(f));
  throw UsageError("unknown family '" + name + "' (known: " + known + ", o, so, omega)");
}

std::uint64_t require_q(std::uint64_t q, const char* what) {
  if (q == 0) throw UsageError(std::string(what) + " needs --q");
  return q;
}

std::optional<ExceptionalType> exceptional_by_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
  return parse_exceptional(name);
}

struct KcountArgs {
  std::string family;
  std::string type;
  std::string exceptional;
  std::string parity;
  int n = 0;
  std::uint64_t q = 0;
  std::uint64_t j = 1;
  bool symbolic = false;
};

Record cmd_kcount(const KcountArgs& a) {
  Record r{"kcount"};
  r.params["family"] = a.family;
  if (!a.type.empty()) r.params["type"] = a.type;
  r.params["n"] = a.n;
  if (a.q) r.params["q"] = a.q;

  GroupSpec g;
  if (a.family == "exceptional" || exceptional_by_name(a.family)) {
    const std::string name = a.family == "exceptional" ? a.exceptional : a.family;
    const auto t = exceptional_by_name(name);
    if (!t) throw UsageError("unknown exceptional type '" + name + "'");
    g.family = Family::Exceptional;
    g.exceptional = *t;
    r.params["exceptional"] = std::string(exceptional_name(*t));
  } else {
    g.family = resolve_family(a.family, a.type);
    g.n = a.n;
  }
  if (a.symbolic) {
    if (g.family == Family::Exceptional) throw UsageError("--symbolic is not available for exceptional groups");
    Parity parity = Parity::Odd;
    if (a.parity == "odd" || a.parity == "even") {
      parity = a.parity == "odd" ? Parity::Odd : Parity::Even;
    } else if (a.q) {
      parity = a.q % 2 ? Parity::Odd : Parity::Even;
    } else if (g.family != Family::GL && g.family != Family::GU) {
      throw UsageError("--symbolic for this family needs --parity odd|even (or a --q to take it from)");
    }
    r.params["symbolic"] = true;
    if (g.family != Family::GL && g.family != Family::GU) {
      r.params["parity"] = parity == Parity::Odd ? "odd" : "even";
    }
    const QPoly p = k_symbolic(g.family, g.n, parity);
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(coeff_json(c));
    r.result["k_poly"] = coeffs;
    return r;
  }
  g.q = require_q(a.q, "kcount");
  g.j = a.j;
  if (g.family == Family::BetweenSLGL) r.params["j"] = a.j;
  const ClassCount k = class_count(g);
  r.result["k"] = str(k.value);
  if (k.upper_bound) r.result["upper_bound"] = true;
  return r;
}

struct CentralizerArgs {
  std::string family;
  std::string type;
  int n = 0;
  std::uint64_t q = 0;
  bool min = false;
  std::string class_spec;
};

Record cmd_centralizer(const CentralizerArgs& a) {
  Record r{"centralizer"};
  const Family f = resolve_family(a.family, a.type);
  const std::uint64_t q = require_q(a.q, "centralizer");
  r.params["family"] = std::string(family_name(f));
  r.params["n"] = a.n;
  r.params["q"] = q;
  const bool closed_form = f == Family::GL || f == Family::GU;
  if (!a.class_spec.empty()) {
    if (!closed_form) throw UsageError("--class is available for gl and gu only");
    const ClassType ct = parse_class_type(a.class_spec);
    if (ct.dimension() != a.n) {
      throw UsageError("class type has dimension " + std::to_string(ct.dimension()) + ", expected " +
                       std::to_string(a.n));
    }
    const BigInt c = f == Family::GL ? gl_centralizer_order(ct, q) : gu_centralizer_order(ct, q);
    r.params["class"] = ct.to_string();
    r.result["centralizer"] = str(c);
    r.result["class_size"] = str(exact_div(group_order(f, a.n, q), c, "class size"));
    return r;
  }
  if (!a.min) throw UsageError("centralizer needs --min or --class");
  if (closed_form) {
    r.result["min_centralizer"] = str(min_centralizer_exact(f, a.n, q));
  } else {
    const OracleGroup g = realize_group(f, a.n, static_cast<unsigned>(q));
    const ConjugacyData d = conjugacy_data(g);
    std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
    for (const auto& c : d.classes) m = std::min(m, c.centralizer);
    r.result["min_centralizer"] = std::to_string(m);
    r.result["source"] = "enumeration";
  }
  const BoundSpec b = min_centralizer_lower_bound(f, a.n, q);
  r.result["paper_bound"] = b.nominal;
  r.result["bound"] = b.tag;
  return r;
}

struct OracleArgs {
  std::string group;
  std::string type;
  int dim = 0;
  std::uint64_t q = 0;
  std::string report = "classes";
  int index = 1;
};

Record cmd_oracle(const OracleArgs& a) {
  Record r{"oracle"};
  const Family f = resolve_family(a.group, a.type);
  const bool permutation = f == Family::SymmetricGroup || f == Family::AlternatingGroup;
  const unsigned q = permutation ? 0 : static_cast<unsigned>(require_q(a.q, "oracle"));
  r.params["group"] = std::string(family_name(f));
  r.params["dim"] = a.dim;
  if (!permutation) r.params["q"] = q;
  r.params["report"] = a.report;

  const bool projective =
      f == Family::PGL || f == Family::PSL || f == Family::PGU || f == Family::PSU;
  if (projective) {
    if (a.report != "classes") throw UsageError("projective groups support --report classes only");
    r.result["k"] = oracle_class_count(f, a.dim, q);
    return r;
  }
  const OracleGroup g = realize_group(f, a.dim, q);
  if (a.report == "order") {
    r.result["order"] = std::to_string(g.order());
    return r;
  }
  if (a.report == "derangement") {
    if (a.index < 1 || a.index > a.dim) {
      throw UsageError("--index must lie in 1.." + std::to_string(a.dim));
    }
    r.params["index"] = a.index;
    // Stabilizer of the a.index-th point (permutation groups) or of the line
    // spanned by the a.index-th basis vector (matrix groups).
    const int i = a.index - 1;
    const int n = a.dim;
    const OracleGroup h = subgroup_where(
        g,
        [i, n](const Mat& x) {
          for (int row = 0; row < n; ++row) {
            if (row != i && x.at(row, i) != 0) return false;
          }
          return true;
        },
        "stabilizer");
    const Rational delta = derangement_proportion(g, h);
    const std::size_t degree = g.order() / h.order();
    r.result["degree"] = std::to_string(degree);
    r.result["proportion"] = delta.get_str();
    r.result["lower_bound"] = degree > 1 ? Rational(1, static_cast<unsigned long>(degree)).get_str() : "0";
    return r;
  }
  const ConjugacyData d = conjugacy_data(g);
  if (a.report == "classes") {
    std::size_t semisimple = 0;
    for (const auto& c : d.classes) semisimple += c.semisimple;
    r.result["k"] = d.classes.size();
    if (!permutation) r.result["semisimple"] = semisimple;
    return r;
  }
  if (a.report == "unipotent") {
    if (permutation) throw UsageError("--report unipotent needs a matrix group");
    std::uint64_t count = 0;
    for (const auto& c : d.classes) {
      if (c.unipotent) count += c.size;
    }
    r.result["count"] = std::to_string(count);
    return r;
  }
  throw UsageError("unknown report '" + a.report + "'");
}

struct LimitArgs {
  std::string family;
  std::uint64_t q = 0;
  int n_min = 1;
  int n_max = 0;
};

Record cmd_limit(const LimitArgs& a) {
  Record r{"limit"};
  const auto f = parse_limit_family(a.family);
  if (!f) {
    std::string known;
    for (auto x : all_limit_families()) known += std::string(known.empty() ? "" : ", ") + std::string(limit_family_name(x));
    throw UsageError("unknown limit family '" + a.family + "' (known: " + known + ")");
  }
  const std::uint64_t q = require_q(a.q, "limit");
  r.params["family"] = std::string(limit_family_name(*f));
  r.params["q"] = q;
  const LimitValue v = limit_value(*f, q);
  r.result["limit"] = v.value;
  r.result["error"] = v.error;
  if (a.n_max > 0) {
    r.params["n_min"] = a.n_min;
    r.params["n_max"] = a.n_max;
    Json rows = Json::array();
    for (const auto& row : convergence_table(*f, q, a.n_min, a.n_max).rows) {
      rows.push_back({{"n", row.n}, {"k", str(row.k)}, {"ratio", row.ratio}, {"delta", row.delta}});
    }
    r.result["rows"] = rows;
  }
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy class numbers of finite classical groups"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  KcountArgs ka;
  auto* kc = app.add_subcommand("kcount", "Number of conjugacy classes");
  kc->add_option("--family", ka.family, "gl, sl, pgl, psl, between-sl-gl, gu, su, pgu, psu, sp, o, so, omega, "
                                        "o-plus, ..., so-odd, o-odd, omega-odd, sym, alt, exceptional")
      ->required();
  kc->add_option("--n", ka.n, "Matrix dimension (degree for sym/alt)");
  kc->add_option("--q", ka.q, "Field order");
  kc->add_option("--type", ka.type, "plus or minus, for o, so and omega");
  kc->add_option("--j", ka.j, "Index in GL for between-sl-gl")->capture_default_str();
  kc->add_option("--exceptional", ka.exceptional, "Exceptional type: 2B2, 2G2, G2, 2F4, 3D4, F4, E6, 2E6, E7, E8");
  kc->add_option("--parity", ka.parity, "Characteristic parity for --symbolic")->check(CLI::IsMember({"odd", "even"}));
  kc->add_flag("--symbolic", ka.symbolic, "Class number as a polynomial in q (lowest degree first)");

  SuiteOptions so;
  std::string suite = "all";
  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  vf->add_option("--suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  vf->add_option("--max-n", so.max_n, "Largest n (0: suite default)");
  vf->add_option("--max-q", so.max_q, "Largest q")->capture_default_str();

  CentralizerArgs ca;
  auto* ce = app.add_subcommand("centralizer", "Centralizer orders");
  ce->add_option("--family", ca.family)->required();
  ce->add_option("--type", ca.type);
  ce->add_option("--n", ca.n)->required();
  ce->add_option("--q", ca.q)->required();
  auto* min_flag = ce->add_flag("--min", ca.min, "Smallest centralizer order and its lower bound");
  auto* class_opt = ce->add_option("--class", ca.class_spec, "Class type, e.g. 1:p:2,1;2:p:1");
  min_flag->excludes(class_opt);

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "Brute-force enumeration of a small group");
  orc->add_option("--group", oa.group)->required();
  orc->add_option("--type", oa.type);
  orc->add_option("--dim", oa.dim)->required();
  orc->add_option("--q", oa.q);
  orc->add_option("--report", oa.report)
      ->check(CLI::IsMember({"order", "classes", "unipotent", "derangement"}))
      ->capture_default_str();
  orc->add_option("--index", oa.index, "Point (or basis line) whose stabilizer defines the action")
      ->capture_default_str();

  LimitArgs la;
  auto* lim = app.add_subcommand("limit", "Limit of k/q^n and a convergence table");
  lim->add_option("--family", la.family)->required();
  lim->add_option("--q", la.q)->required();
  lim->add_option("--n-min", la.n_min)->capture_default_str();
  lim->add_option("--n-max", la.n_max, "Print rows up to this n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (vf->parsed()) {
      const VerifyReport rep = run_suite(suite, so);
      if (format == "json") {
        out << rep.to_json() << "\n";
      } else if (format == "csv") {
        out << rep.to_csv();
      } else {
        out << rep.to_table();
      }
      return rep.ok() ? kExitOk : kExitVerificationFailed;
    }
    Record r;
    if (kc->parsed()) r = cmd_kcount(ka);
    if (ce->parsed()) r = cmd_centralizer(ca);
    if (orc->parsed()) r = cmd_oracle(oa);
    if (lim->parsed()) r = cmd_limit(la);
    print_record(r, format, out);
    return kExitOk;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace chev
