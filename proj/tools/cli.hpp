#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dendrifam::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kOk = 0, kCounterexample = 1, kUsage = 2, kMisuse = 3 };

/// Runs the tool on `args` (without the program name). Results go to `out`,
/// progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dendrifam::cli
