#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerbrick::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kValidationFailure = 3,
  kFinding = 4,
};

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerbrick::cli
