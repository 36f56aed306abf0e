#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indcert::cli {

enum ExitCode {
  kSuccess = 0,  // sat / accepted / done
  kNegative = 1,  // unsat / rejected / golden mismatch
  kUnknown = 2,
  kUsage = 3,  // usage, input or I/O error
  kBackend = 4,
};

/// Runs one subcommand; `args` excludes the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indcert::cli
