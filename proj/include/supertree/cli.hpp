#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace supertree::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kOk = 0, kInvalid = 1, kVerificationFailed = 2 };

/// Runs one invocation; args excludes the program name. Results go to `out`,
/// diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supertree::cli
