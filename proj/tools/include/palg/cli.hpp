#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palg::cli {

enum ExitCode : int { Ok = 0, MathFailure = 1, UsageError = 2, BudgetError = 3 };

/// Runs the command line `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

}  // namespace palg::cli
