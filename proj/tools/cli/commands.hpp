#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mods::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitLimit = 2;
inline constexpr int kExitSuiteFailure = 3;

// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mods::cli
