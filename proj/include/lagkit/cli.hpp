#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lagkit {

// Exit codes of the lagkit command line.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagkit
