#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dihedral {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the command line; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dihedral
