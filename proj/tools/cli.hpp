#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itree::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

// Runs one command line (without the program name) and returns the exit
// code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itree::cli
