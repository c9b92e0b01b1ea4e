#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace edgedist::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kCertificateError = 2;
inline constexpr int kBudgetExceeded = 3;
inline constexpr int kNotInClass = 4;

/// Runs `edgedist <args...>`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgedist::cli
