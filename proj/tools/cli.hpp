#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quot::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,       // usage, parse, or precondition errors
  kInconsistency = 3,    // a check that must hold did not
  kGuardExceeded = 4,    // enumeration or Groebner size limit hit
};

/// Entry point shared by the executable and the tests. Output goes to `out`
/// (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quot::cli
