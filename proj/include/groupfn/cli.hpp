#pragma once

#include <string>
#include <vector>

namespace groupfn::cli {

// Exit statuses shared by every subcommand.
enum ExitStatus : int {
  kOk = 0,              // all checks passed / certificate produced
  kCounterexample = 1,  // a check failed; the report carries the witnesses
  kUsage = 2,           // bad arguments, config or input files
  kBudget = 3,          // refinement or search budget exhausted
};

// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace groupfn::cli
