#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace majorant::cli {

/// Exit codes: 0 success or a true verdict, 1 a false verdict, 2 bad input.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majorant::cli
