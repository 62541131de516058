#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rfa::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). The summary goes
/// to out, diagnostics to err; --json writes the report to a file or "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rfa::cli
