#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lrpic/shapes.hpp"

namespace lrpic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "3,1,1" (an empty string is the empty partition). Throws
/// std::invalid_argument naming `flag` and the expected grammar.
Partition parse_partition(std::string_view text, std::string_view flag);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrpic::cli
