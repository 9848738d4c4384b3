#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace splitgraph {

// Exit codes of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitgraph
