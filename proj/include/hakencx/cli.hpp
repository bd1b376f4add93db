#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hakencx::cli {

enum ExitCode : int { Pass = 0, VerdictFail = 1, UsageError = 2, InputError = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hakencx::cli
