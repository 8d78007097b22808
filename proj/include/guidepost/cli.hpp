#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace guidepost {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitResourceCap = 3;

// Runs one subcommand; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace guidepost
