#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace codecalc::cli {

/// Bad command line: unknown option, invalid combination, bad enum value.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitStatus : int { kOk = 0, kUsageOrDomain = 1, kInvariant = 2 };

/// Runs one command; `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Output is deterministic apart from verify timings.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codecalc::cli
