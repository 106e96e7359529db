#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polarspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line; args excludes the program name. Report output goes to `out`
// unless --output is given, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polarspec::cli
