#pragma once

#include <iosfwd>

namespace gal::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
    Ok = 0,
    ChecksFailed = 1,
    Usage = 2,
    Guard = 3,
    Solver = 4,
};

/// Runs the `gal` command line; all output goes to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace gal::cli
