#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcashrink::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoParse = 2,
  kNumeric = 3,
  kViolation = 4,
};

/// Runs the command-line front end; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcashrink::cli
