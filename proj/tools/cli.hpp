#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace intnfa::cli {

enum ExitCode : int { Ok = 0, Failed = 1, UsageError = 2, ResourceExceeded = 3 };

/// Runs the command line `args` (without the program name), writing to the
/// given streams. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace intnfa::cli
