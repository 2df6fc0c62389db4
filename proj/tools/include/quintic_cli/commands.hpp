#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quintic::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,       // no viable split, unmatched verify trial, divergent series
  kParseError = 2,
  kNoConvergence = 3,
};

/// Runs the `quintic` command line. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quintic::cli
