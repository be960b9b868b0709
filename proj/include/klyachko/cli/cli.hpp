#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klyachko::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotGelfand = 1;
inline constexpr int kExitResourceRefusal = 2;
inline constexpr int kExitInvariantViolation = 3;
inline constexpr int kExitInputError = 4;

/// Runs one command line (args[0] is the program name) and returns the exit
/// code. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klyachko::cli
