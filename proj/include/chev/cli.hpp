#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chev {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitCapExceeded = 3,
};

/// Runs the command line (args excludes the program name), writing results
/// to out and diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chev
