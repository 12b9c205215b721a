#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsroots::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kPrecondition = 2,
  kIndeterminate = 3,
  kInternal = 4,
};

/// Runs one command. `args` excludes the program name. Results go to `out`;
/// failures print a single-line JSON object {"error", "exit_code",
/// "message"} to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsroots::cli
