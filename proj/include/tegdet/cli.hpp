#pragma once

#include <iosfwd>

namespace tegdet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kInternalError = 3,
};

/// Runs the command line (argv[0] is the program name) and returns the exit
/// status. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tegdet::cli
