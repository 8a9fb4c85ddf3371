#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubewalk::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitInvalidInput = 2,
  kExitViolationFound = 3,
};

/// Runs one subcommand. `args` excludes the program name. The primary
/// document goes to `out`; diagnostics and the run manifest go to `err`
/// unless `--manifest <path>` is given.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubewalk::cli
