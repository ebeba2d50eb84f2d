#ifndef RINGCOVER_TOOLS_CLI_HPP
#define RINGCOVER_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ringcover::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCap = 2,
  kInvariant = 3,
  kSelftestFailed = 4,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringcover::cli

#endif  // RINGCOVER_TOOLS_CLI_HPP
