#pragma once

#include <iosfwd>

namespace swfri::cli {

enum ExitCode : int {
  kFeasible = 0,
  kInfeasible = 1,
  kInvalidInput = 2,
  kBudgetExhausted = 3,
};

// Environment variable holding the default --threads value.
inline constexpr const char* kThreadsEnv = "FRI_SOLVE_THREADS";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swfri::cli
