#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dispo::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kOverflow = 3,
};

/// Runs one command line (args excludes the program name). Objects are read
/// from `in` one per line and written to `out` one per line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dispo::cli
