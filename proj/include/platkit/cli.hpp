#pragma once

#include <ostream>

namespace platkit::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
};

/// Runs one subcommand.  Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace platkit::cli
