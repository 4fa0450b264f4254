#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace periodica::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,    // verify found a counterexample, or an internal consistency check failed
  kInputError = 2,     // bad arguments, files, syntax, or mathematically invalid input
  kLimitError = 3,     // a configured size or budget limit was hit
  kInconclusive = 4,   // coset enumeration did not close
};

/// Runs one command. `args` excludes the program name. Output is written to
/// `out` only when the command completes; errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace periodica::cli
