#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace embrank {

// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitNotPlanar = 2,
  kExitRankOutOfRange = 3,
  kExitVerifyFailed = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace embrank
