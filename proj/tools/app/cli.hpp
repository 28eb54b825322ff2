#pragma once

#include <ostream>

namespace kfin::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitResource = 3,
  kExitUnsupported = 4,
};

/// Entry point of the kfin tool, with streams injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kfin::app
