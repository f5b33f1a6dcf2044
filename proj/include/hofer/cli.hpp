#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hofer::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one invocation. args[0] is the program name. JSON goes to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hofer::cli
