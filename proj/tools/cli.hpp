#ifndef MBRANCH_TOOLS_CLI_HPP_
#define MBRANCH_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mbranch::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,  // infeasible parameters or oversize instance
  kParseError = 2,  // unreadable input or bad command line
  kAuditFailure = 3,
};

// Runs one command line (args excludes the program name). Writes results
// to `out` and diagnostics to `err`, returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbranch::cli

#endif  // MBRANCH_TOOLS_CLI_HPP_
