#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arakelov::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kParseError = 2,
  kVerificationFailure = 3,
};

/// Runs one command line (without the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arakelov::cli
