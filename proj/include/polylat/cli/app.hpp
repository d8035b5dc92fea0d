#pragma once

#include <iosfwd>

namespace polylat::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2, kResourceRefusal = 3 };

/// Parses argv, runs the selected subcommand and returns its exit code.
/// Normal output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polylat::cli
