#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sctrl {

/// Exit codes of `sctrl analyze`; other subcommands use kExitOk and
/// kExitInputError only.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUncontrollable = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOracleMismatch = 3;

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sctrl
