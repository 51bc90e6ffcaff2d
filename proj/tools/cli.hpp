#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gallai::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kUsageError = 2,
  kVerificationFailure = 3,
  kNumericError = 4,
};

/// Runs one command line (without the program name). Graph input that is
/// not given by --in or --gen is read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace gallai::cli
