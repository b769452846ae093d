#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deform::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,        // malformed flags or arguments
  kDomain = 2,       // divergent level, out-of-domain parameters, bad Lamb data
  kVerifyFailed = 3,
};

/// Runs the command line `args` (args[0] is the program name). Records go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace deform::cli
