#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numdup::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kVerificationFailed = 3,
};

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace numdup::cli
