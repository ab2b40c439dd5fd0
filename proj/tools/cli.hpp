#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace girreg::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kHypothesisViolated = 2,
    kBudgetExceeded = 3,
};

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace girreg::cli
