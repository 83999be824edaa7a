#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncsurf::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,         ///< success / check passed
    exit_failed = 1,     ///< semantic failure (check failed, invariant distinguishes, ...)
    exit_input = 2,      ///< parse or usage error
    exit_budget = 3,     ///< search or resource budget exhausted
};

/// Runs the tool on the given arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncsurf::cli
