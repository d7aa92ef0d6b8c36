#pragma once

#include <iosfwd>

namespace tvpoint::cli {

/// Exit codes: 0 success, 1 usage or configuration error, 2 input/output error.
enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2 };

/**
 * Entry point of the `tvpoint` command line tool.
 *
 * Subcommands: fit, simulate, mise-study, consistency-study. Diagnostics go
 * to `err`; a fit report without --out is printed to `out`.
 */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tvpoint::cli
