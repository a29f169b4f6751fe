#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace escalade::cli {

enum ExitStatus : int {
  kOk = 0,
  kNegative = 1,  // the analysis answered "no" (check failed, no equilibrium)
  kUsage = 2,     // bad arguments, unreadable or malformed input
  kLimit = 3,     // enumeration cap or search bound reached
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace escalade::cli
