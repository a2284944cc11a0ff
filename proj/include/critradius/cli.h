#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critradius {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `critradius` command line. `args` excludes the program name.
/// Machine-readable results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critradius
