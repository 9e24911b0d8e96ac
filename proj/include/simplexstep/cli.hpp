#pragma once

#include <iosfwd>

namespace simplexstep {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNumericFailure = 1,
  kExitParseError = 2,
  kExitDomainError = 3,
};

/// Entry point of the `simplexstep` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplexstep
