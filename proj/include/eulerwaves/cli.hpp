#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerwaves {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitSolverError = 2, kExitUsage = 64 };

/// Entry point of the `euler_waves` tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string list_text();

}  // namespace eulerwaves
