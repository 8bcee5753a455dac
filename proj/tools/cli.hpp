#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nihoperm::cli {

/// Exit codes of the nihoperm tool.
enum ExitCode : int {
  kOk = 0,              // every claim verified
  kClaimFailed = 1,     // a claim failed; a witness was printed
  kDisagreement = 2,    // engines disagree, which is always a bug
  kUsage = 64,          // bad flags, bad parameters, unsupported field
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nihoperm::cli
