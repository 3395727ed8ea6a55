#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adrcode::cli {

/// Exit codes of the `adrcode` command.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kBadInput = 2;  // usage errors, unreadable or malformed files

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace adrcode::cli
