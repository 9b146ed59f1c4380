#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alq {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,     // bad arguments, unreadable/unwritable files, parse errors
    kExitRejected = 2,  // well-formed input outside the certified regime
};

/// Runs the tool on `args` (args[0] is the program name). All output goes to
/// the given streams; files are only touched by `enumerate --out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alq
