#pragma once

// Command-line front end: eval / table / plot / verify.

#include <iosfwd>
#include <string>
#include <vector>

namespace hatom::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kIo = 3,
};

/// Runs the tool on `args` (without the program name), writing normal output
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest-round-trip-safe 17 significant digit rendering, locale independent.
std::string format_number(double v);

}  // namespace hatom::cli
