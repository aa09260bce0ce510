#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skeleta {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or the --output file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeleta
