#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerquad::cli {

enum ExitCode : int { kOk = 0, kComputationError = 1, kUsageError = 2 };

/// Runs one eulerquad command line (without the program name). Results go
/// to `out` (or the --out file) only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerquad::cli
