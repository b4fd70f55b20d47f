#pragma once

#include <ostream>

namespace ipc::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,
  kPropertyViolation = 2,
  kResourceCap = 3,
};

/// Parses the command line and writes one JSON document to `out` (or to the
/// --out file). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ipc::cli
