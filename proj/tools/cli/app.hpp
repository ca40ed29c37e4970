#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlsenergy::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,
  kVerificationFailed = 3,
};

/// Parses arguments (argv[0] is the program name) and runs one subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlsenergy::cli
