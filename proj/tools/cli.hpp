#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stark_toric::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kNumericalError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stark_toric::cli
