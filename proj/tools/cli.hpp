#pragma once

// The `wordchains` command line, as a library entry point so tests can drive
// it without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

namespace wordchains::cli {

// Exit codes. Parse and usage failures follow the BSD sysexits numbering.
enum ExitCode : int {
  kVerified = 0,
  kRefuted = 1,
  kInconclusive = 2,
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
  kInternal = 70,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordchains::cli
