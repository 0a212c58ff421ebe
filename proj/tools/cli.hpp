#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blowchern::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,         // parse, semantic or usage errors
  kVerificationFailed = 2  // failed oracle or disagreeing Chern paths
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blowchern::cli
