#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lietrees {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lietrees
