#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace capkit {

/// Exit statuses shared by every verb.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // a violation was found
  kExitUsage = 2,     // usage, parse or budget error
  kExitInternal = 3,  // internal cross-check failed
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace capkit
