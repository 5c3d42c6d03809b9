#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qpdt::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailed = 1,
  kExitInvalid = 2,
  kExitIo = 3,
  kExitNumerical = 4,
};

/// Runs one command line. `args` excludes the program name, e.g.
/// {"transform", "--preset", "dunkl", "--fn", "gaussian"}. Results go to
/// `out` unless --output/--report name a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpdt::cli
