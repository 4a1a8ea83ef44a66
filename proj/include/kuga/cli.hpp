#pragma once

#include <ostream>

namespace kuga {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default numeric tolerance.
inline constexpr const char* kToleranceEnv = "KUGA_TOL";

/// Command-line entry point: parses argv, runs a subcommand, writes JSON to `out` and
/// diagnostics to `err`. Returns 0 when every check passes, 1 on a failed check, 2 on
/// a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kuga
