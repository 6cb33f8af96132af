#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symcheb::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kResourceError = 3;

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or the file named by --out), diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcheb::cli
