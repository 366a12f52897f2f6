#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bergman::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kUsageError = 2 };

/// Runs one command line (args excludes the program name). Tables go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bergman::cli
