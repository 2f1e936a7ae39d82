#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wrightfrac::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), one-line error reasons to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wrightfrac::cli
