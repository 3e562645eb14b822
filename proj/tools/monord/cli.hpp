#ifndef MONORD_TOOLS_CLI_HPP
#define MONORD_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace monord::cli {

enum ExitCode : int {
  kOk = 0,
  kLess = 10,
  kEqual = 11,
  kGreater = 12,
  kUsage = 64,
  kData = 65,
  kResource = 69,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monord::cli

#endif  // MONORD_TOOLS_CLI_HPP
