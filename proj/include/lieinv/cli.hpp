#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieinv::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kUnsupported = 3,
};

// Runs one lie-inv invocation. args excludes the program name. Errors go to
// err as a single "error[kind]: message" line followed by optional detail.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieinv::cli
