#pragma once

#include <iosfwd>

namespace linearr {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Runs the linearr command line with the given arguments (argv[0] is the
/// program name), writing results to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linearr
