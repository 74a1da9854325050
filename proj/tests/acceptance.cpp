// Runs the nine acceptance checks and prints one PASS/FAIL line for each.
// Exit status is non-zero when any check fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "chev/bounds.hpp"
#include "chev/suites.hpp"

using namespace chev;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string summary(const VerifyReport& r) {
  std::ostringstream os;
  os << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
     << r.count(Status::Inconclusive) << " inconclusive";
  return os.str();
}

// First non-passing entries, for the detail column.
std::string problems(const VerifyReport& r, std::size_t limit = 4) {
  std::string s;
  std::size_t shown = 0;
  for (const auto& e : r.entries()) {
    if (e.status == Status::Pass) continue;
    if (shown++ == limit) {
      s += "; ...";
      break;
    }
    s += "; " + std::string(status_name(e.status)) + " " + e.claim + " [" + e.params + "] " + e.witness;
  }
  return s;
}

Outcome from_report(const VerifyReport& r, bool allow_inconclusive, double seconds, double budget) {
  Outcome o;
  o.pass = r.count(Status::Fail) == 0 && (allow_inconclusive || r.count(Status::Inconclusive) == 0) &&
           seconds < budget;
  std::ostringstream os;
  os << summary(r) << ", " << seconds << " s (budget " << budget << " s)" << problems(r);
  o.detail = os.str();
  return o;
}

template <class F>
std::pair<VerifyReport, double> timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport r = f();
  return {std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"oracle equivalence of class numbers",
       [] {
         auto [r, s] = timed([] { return oracle_class_suite(); });
         return from_report(r, false, s, 120);
       }},
      {"series and polynomial-count identities to order 60",
       [] {
         auto [r, s] = timed([] { return identities_suite(60, {2, 3, 4, 5, 7, 9}); });
         return from_report(r, false, s, 10);
       }},
      {"inequality sweep, n <= 30, q <= 9",
       [] {
         auto [r, s] = timed([] { return check_inequalities(); });
         return from_report(r, true, s, 300);
       }},
      {"limit values within +-0.05 of the quoted values",
       [] {
         auto [r, s] = timed([] { return check_limits(30); });
         return from_report(r, false, s, 30);
       }},
      {"GL(n,q) class number polynomials, n <= 12",
       [] {
         auto [r, s] = timed([] { return check_polynomiality(12); });
         return from_report(r, false, s, 60);
       }},
      {"centralizer bounds and class equations",
       [] {
         auto [r, s] = timed([] { return centralizer_suite(); });
         return from_report(r, false, s, 120);
       }},
      {"unipotent element counts",
       [] {
         auto [r, s] = timed([] { return unipotent_suite(); });
         return from_report(r, false, s, 120);
       }},
      {"coset class distribution, k(A_m) < k(S_m), semisimple classes",
       [] {
         auto [r, s] = timed([] { return structure_suite(); });
         return from_report(r, false, s, 120);
       }},
      {"derangement proportions and the union bound",
       [] {
         auto [r, s] = timed([] { return derangement_suite(); });
         return from_report(r, false, s, 120);
       }},
  };
  int failed = 0;
  int i = 0;
  for (const auto& c : criteria) {
    ++i;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.name << " (" << o.detail
              << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
