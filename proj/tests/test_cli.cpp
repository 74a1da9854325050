#include <sstream>

#include "chev/classcount.hpp"
#include "chev/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace chev;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("kcount") {
    CHECK(run_json({"kcount", "--family", "gl", "--n", "2", "--q", "3"})["k"] == "8");
    CHECK(run_json({"kcount", "--family", "sp", "--n", "4", "--q", "3"})["k"] == "34");
    CHECK(run_json({"kcount", "--family", "gl", "--n", "2", "--symbolic"})["k_poly"] == json::array({-1, 0, 1}));
    CHECK(run_json({"kcount", "--family", "o", "--type", "minus", "--n", "4", "--q", "2"})["k"] == "7");
    const json e = run_json({"kcount", "--family", "e8", "--q", "2"});
    CHECK(e["k"] == "1302");
    CHECK(e["upper_bound"] == true);
    CHECK(run_json({"kcount", "--family", "between-sl-gl", "--n", "2", "--q", "5", "--j", "2"})["k"] == "18");
  }

  TEST_CASE("big integers stay strings") {
    const json j = run_json({"kcount", "--family", "gl", "--n", "60", "--q", "9"});
    REQUIRE(j["k"].is_string());
    CHECK(j["k"].get<std::string>().size() > 50);
  }

  TEST_CASE("centralizer and oracle") {
    const json c = run_json({"centralizer", "--family", "gl", "--n", "2", "--q", "2", "--min"});
    CHECK(c["min_centralizer"] == "2");
    CHECK(c["paper_bound"].get<double>() == doctest::Approx(0.2846).epsilon(1e-4));
    const json o = run_json({"oracle", "--group", "sp", "--dim", "4", "--q", "3", "--report", "classes"});
    CHECK(o["k"] == 34);
    CHECK(o["semisimple"] == 9);
    CHECK(run_json({"oracle", "--group", "o-minus", "--dim", "4", "--q", "2", "--report", "unipotent"})["count"] ==
          "56");
    const json d = run_json({"oracle", "--group", "sym", "--dim", "5", "--report", "derangement", "--index", "1"});
    CHECK(d["proportion"] == "11/30");
  }

  TEST_CASE("json output round-trips") {
    const std::vector<std::vector<std::string>> commands = {
        {"kcount", "--family", "gu", "--n", "3", "--q", "4"},
        {"kcount", "--family", "sp", "--n", "6", "--symbolic", "--parity", "even"},
        {"centralizer", "--family", "gu", "--n", "2", "--q", "3", "--class", "1:c:1"},
        {"oracle", "--group", "gl", "--dim", "2", "--q", "3", "--report", "order"},
        {"limit", "--family", "sp-odd-q", "--q", "3", "--n-max", "5"},
    };
    for (const auto& cmd : commands) {
      const json j = run_json(cmd);
      CHECK(json::parse(j.dump()) == j);
      CHECK(j["command"] == cmd.front());
    }
  }

  TEST_CASE("library and command line agree") {
    for (int n = 1; n <= 6; ++n) {
      const json j = run_json({"kcount", "--family", "gl", "--n", std::to_string(n), "--symbolic"});
      const QPoly p = k_gl_symbolic(n);
      REQUIRE(j["k_poly"].size() == p.coeffs().size());
      for (std::size_t i = 0; i < p.coeffs().size(); ++i) CHECK(j["k_poly"][i] == p.coeffs()[i].get_si());
    }
  }

  TEST_CASE("formats") {
    const Run t = run({"kcount", "--family", "gl", "--n", "2", "--q", "3"});
    CHECK(t.code == 0);
    CHECK(t.out.find("8") != std::string::npos);
    const Run c = run({"--format", "csv", "limit", "--family", "gl", "--q", "2", "--n-max", "3"});
    CHECK(c.code == 0);
    CHECK(c.out.find("n,k,ratio,delta") != std::string::npos);
    const Run v = run({"--format", "json", "verify", "--suite", "polynomiality"});
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["fail"] == 0);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"kcount", "--family", "nope", "--n", "2", "--q", "3"}).code == kExitUsage);
    CHECK(run({"kcount", "--family", "gl", "--n", "2", "--q", "6"}).code == kExitUsage);
    CHECK(run({"kcount", "--family", "gl"}).code == kExitUsage);
    CHECK(run({"kcount", "--family", "o", "--n", "4", "--q", "3"}).code == kExitUsage);
    CHECK(run({"--bogus"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"kcount", "--family", "gl", "--n", "500", "--q", "2"}).code == kExitCapExceeded);
    CHECK(run({"verify", "--suite", "bounds", "--max-n", "4", "--max-q", "3"}).code == kExitVerificationFailed);
    CHECK(run({"--help"}).code == kExitOk);
  }
}
