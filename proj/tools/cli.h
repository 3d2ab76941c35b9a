#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klab::cli {

// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadParams = 2,
  kTimeout = 3,
  kSizeCap = 4,
};

// Runs one command line (args[0] is the program name) against the given
// streams and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klab::cli
