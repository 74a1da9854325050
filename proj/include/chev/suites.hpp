#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chev/report.hpp"

namespace chev {

/// Knobs shared by the suites. Zero means the suite's own default.
struct SuiteOptions {
  int max_n = 0;
  std::uint64_t max_q = 9;
};

/// Series identities (pentagonal, Gauss, Jacobi), the reciprocal-polynomial
/// products, sum_{d|r} d N(q;d) = q^r - 1, dual generating-function forms and
/// symbolic-vs-numeric extraction.
VerifyReport identities_suite(int order, const std::vector<std::uint64_t>& qs);

/// Formula class numbers against brute-force enumeration, group orders,
/// Burnside counts, generated-vs-enumerated isometry groups and the O/SO
/// class-splitting criterion.
VerifyReport oracle_class_suite();

/// Partition monotonicity, the crude exponential bound, class equations,
/// and exact minimum centralizers against the closed-form bounds.
VerifyReport centralizer_suite();

/// Elements of p-power order: formula against enumeration.
VerifyReport unipotent_suite();

/// Coset class distributions over cyclic quotients, k(A_m) < k(S_m) and
/// semisimple class counts in simply connected groups.
VerifyReport structure_suite();

/// Derangement proportions against 1/|Omega| and the union bound.
VerifyReport derangement_suite();

std::vector<std::string> suite_names();

/// Runs a named suite ("identities", "bounds", "limits", "polynomiality",
/// "centralizer", "oracle", "all"). Throws InvalidArgument for other names.
VerifyReport run_suite(std::string_view name, const SuiteOptions& opts = {});

}  // namespace chev
