#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdlb::cli {

enum ExitCode : int {
  Ok = 0,
  UsageError = 1,  // bad arguments, unreadable files, parse diagnostics
  Inconsistent = 2,
  Incomplete = 3,  // undecided pairs under --strict-complete, or `complete`
  NoDerivation = 4,
};

/// Runs `fdlb` with `args` (program name excluded), writing reports to `out`
/// and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdlb::cli
