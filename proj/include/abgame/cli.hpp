// cli.hpp -- the `abgame` command-line front end, callable in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abgame::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;  ///< Infeasible, ambiguous, inconsistent, partial search.
inline constexpr int kUsageError = 2;

/// Environment variable holding the default search node budget.
inline constexpr const char* kBudgetEnv = "ABGAME_BUDGET";

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abgame::cli
