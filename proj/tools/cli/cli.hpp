#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linrec::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kDomain = 3,
  kUnsupportedRing = 4,
};

/// Runs one command. `args` excludes the program name. Descriptor arguments
/// named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace linrec::cli
