#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbci {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns 0 on pass, 1 when a check fails, 2 on a
/// usage, parse or size-cap error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbci
