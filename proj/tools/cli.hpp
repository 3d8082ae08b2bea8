#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sixj::cli {

enum ExitCode : int {
  kOk = 0,
  kBadInput = 2,
  kIoFailure = 3,
  kGeometryFailure = 4,
};

/// Runs one command line.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sixj::cli
