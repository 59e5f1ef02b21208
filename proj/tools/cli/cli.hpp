#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittlab::cli {

enum ExitCode : int {
  kOk = 0,            // computed, including negative verdicts
  kUsage = 1,         // bad command line
  kInput = 2,         // unparsable element, window or file
  kPrecondition = 3,  // TruncationTooSmall, WindowTooSmall, ...
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittlab::cli
