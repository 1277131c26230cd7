#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace owa::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitMethodDomain = 3,
  kExitIo = 4,
};

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace owa::cli
