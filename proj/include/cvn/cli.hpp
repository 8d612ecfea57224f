#pragma once

#include <iosfwd>

namespace cvn {

// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitParse = 1, kExitDomain = 2, kExitBudget = 3 };

// Runs one command; JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvn
