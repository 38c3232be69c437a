#pragma once

#include <iosfwd>

namespace dfm {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,          ///< I/O, parse or shape errors; internal failures
  kExitNotCommuting = 2,   ///< check-commute: M M' != M' M
  kExitDomainError = 3,    ///< a mathematical hypothesis of the command failed
  kExitUsage = 64,
};

/// Entry point shared by the dfmat binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dfm
