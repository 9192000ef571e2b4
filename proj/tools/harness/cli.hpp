#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasi::cli {

enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Entry point of the `quasi` tool: subcommands exact, test, seed-test,
/// stream, gen, experiment. args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace quasi::cli
