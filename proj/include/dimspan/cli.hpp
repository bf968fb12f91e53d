#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dimspan::cli {

/// Exit codes: 0 success, 1 runtime failure or `check` mismatch, 2 usage.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Runs one command line; `args[0]` is the program name. A missing
/// --output writes results to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dimspan::cli
