#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypo::cli {

enum ExitCode : int { ok = 0, usage_error = 1, guard_violation = 2, oracle_mismatch = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypo::cli
