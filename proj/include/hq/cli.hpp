#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hq::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kUnresolved = 2,
  kInconsistent = 3,
};

// Runs the command line (without the program name). Normal output goes to
// `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace hq::cli
