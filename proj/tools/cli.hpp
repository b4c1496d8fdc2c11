#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringlab::cli {

enum ExitCode : int { kOk = 0, kFailures = 1, kUsage = 2 };

/// Runs one invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringlab::cli
