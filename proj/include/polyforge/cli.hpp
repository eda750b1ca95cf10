// Batch command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Output is
/// deterministic for identical arguments and environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyforge::cli
