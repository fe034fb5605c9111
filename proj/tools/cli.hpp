#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shannon::cli {

// Exit codes: 0 success, 1 mathematical finding (violation or non_shannon),
// 2 input or usage error, 3 budget exhausted or internal failure.
inline constexpr int kOk = 0;
inline constexpr int kFinding = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternal = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shannon::cli
