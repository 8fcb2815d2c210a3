#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expcurve::cli {

enum ExitCode : int {
  kOk = 0,
  kModelError = 1,
  kInputError = 2,
  kUnreachable = 3,
};

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expcurve::cli
