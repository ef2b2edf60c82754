#pragma once

#include <iosfwd>

namespace negcurv::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kNegativeFound = 0,  // also: bench/exhaustive/gen completed
    kNoNegative = 1,     // all revealed, lambda >= -epsilon
    kUsageError = 2,
};

/// Runs the `negcurv` command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace negcurv::cli
