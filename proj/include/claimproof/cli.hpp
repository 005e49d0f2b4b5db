#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace claimproof::cli {

/// Exit codes: 0 success, 1 well-formed negative answer, 2 usage or input error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace claimproof::cli
