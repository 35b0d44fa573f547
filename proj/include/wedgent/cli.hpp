#pragma once

#include <ostream>

namespace wedgent {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 1,      // syntax errors in expressions, files or flags
    kExitValidation = 2, // normalization, dimensions, schema
    kExitSizeGuard = 3,  // state too large for the requested computation
};

// Subcommands: measure, separability, invariance, parse. See README.md.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wedgent
