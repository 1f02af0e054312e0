#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgrass::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     ///< unknown subcommand, missing or conflicting flags
  kDomain = 2,    ///< malformed file or violated precondition
  kBudget = 3,    ///< enumeration would exceed --budget
  kInternal = 4,  ///< an internal cross-check failed
};

/// Runs one subcommand; `args` excludes the program name. Results go to
/// `out` (a table, or the JSON result document with --format machine),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgrass::cli
