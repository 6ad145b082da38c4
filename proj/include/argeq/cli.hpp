#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace argeq {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitNotConverged = 2,
};

/// Runs one command line (`args` excludes the program name). Documents go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace argeq
