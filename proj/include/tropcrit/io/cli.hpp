#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropcrit {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // negative verdict: unbalanced, not critical, not minimal
  kExitInput = 2,     // unreadable or invalid input, bad usage
  kExitInternal = 3,  // internal invariant violation
};

/// Runs one command. `args` excludes the program name. Inputs named "-" are
/// read from `in`. Documents go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tropcrit
