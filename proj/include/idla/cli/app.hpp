#pragma once

#include <cstdlib>
#include <iosfwd>
#include <string>
#include <vector>

namespace idla::cli {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Environment variable that may raise the N-toss cap.
inline constexpr const char* kNtossCapEnv = "IDLA_NTOSS_CAP";

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idla::cli
