#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace webrank::cli {

enum ExitCode : int {
    Success = 0,
    UsageError = 2,
    InputError = 3,
    ConvergenceFailure = 4,
    DegenerateInput = 5,
};

/// Runs one command line (args[0] is the program name). Results go to @a out
/// unless --out names a file; diagnostics go to @a err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace webrank::cli
