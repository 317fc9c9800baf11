#pragma once

#include <ostream>

namespace conewb {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_refuted = 1,     // refuted certificate or exhausted reduction
    exit_usage = 2,       // bad flags, schema or dimension errors
    exit_xi_rejected = 3,
    exit_degenerate = 4,  // degenerate cone without --quotient
};

/// Runs one command in-process. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace conewb
