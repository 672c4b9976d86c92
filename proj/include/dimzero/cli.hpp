#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dimzero::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // mathematical failure or negative verdict
  kUsage = 2,    // usage or parse error
  kCap = 3,      // a size cap was exceeded
};

/// Runs the `dimzero` command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimzero::cli
