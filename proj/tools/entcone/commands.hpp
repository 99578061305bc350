#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entcone {

enum ExitCode : int {
  kOk = 0,         // PASSES, NON-CONTEXTUAL, PROVABLE, FEASIBLE
  kViolation = 1,  // CONTEXTUAL, NOT PROVABLE, INFEASIBLE
  kError = 2,
  kBudgetExhausted = 3,
};

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`; files named with -o are written directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entcone
