#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpvi {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInternal = 3 };

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpvi
