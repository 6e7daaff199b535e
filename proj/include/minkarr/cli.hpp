#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minkarr::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kHypothesisFails = 2,
  kBoundMisconfigured = 3,
};

// Runs the command line `args` (args[0] is the program name). Instance files
// named "-" are read from `in`; JSON results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace minkarr::cli
