#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringfill::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kViolation = 2,
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringfill::cli
