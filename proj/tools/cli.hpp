#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chamber::cli {

/// Exit codes of the `chamber` tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_invalid_input = 1,
  exit_usage = 2,
  exit_uncertified = 3,
};

/// Runs one command line.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chamber::cli
