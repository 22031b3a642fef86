#pragma once

#include <iosfwd>

namespace fejer::cli {

/// Exit codes: 0 every checked inequality holds, 1 some inequality is
/// violated, 2 invalid input (the diagnostic names the failing field).
enum ExitCode : int { kSatisfied = 0, kViolated = 1, kInputError = 2 };

/// Runs the command line `argv[0] <command> [options]`, writing the report to
/// `out` (or to --out) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fejer::cli
