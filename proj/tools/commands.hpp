#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsw2v::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kTooFewGoods = 2,
  kDichotomous = 3,
  kBudgetExceeded = 4,
  kReductionError = 5,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsw2v::cli
