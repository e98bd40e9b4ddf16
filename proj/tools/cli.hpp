#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semvec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. `in` feeds the repl subcommand and stdin input to convert.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Whitespace split with double-quote grouping, as used for repl lines.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace semvec::cli
