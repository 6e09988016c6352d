#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcat {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcat
