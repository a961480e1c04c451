#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rotbench {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kUsageError = 2;

// Entry point of the `rotbench` command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotbench
