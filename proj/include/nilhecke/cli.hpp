#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilhecke {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitComputation = 1, kExitUsage = 2 };

/// Runs the tool on `args` (without the program name). Output is
/// deterministic: identical arguments give byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilhecke
