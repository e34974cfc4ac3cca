#pragma once

#include <iosfwd>
#include <string>

#include "resolab/tolerances.hpp"

namespace resolab::cli {

enum ExitCode { ok = 0, analysis_failure = 1, usage_error = 2 };

/// Runs one subcommand. Reports go to `out`; diagnostics to `err`, each error
/// followed by a one-line JSON mirror.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1-0.2i", "-i", "2i", "0.5", "re,im".
cplx parse_complex(const std::string& text);

}  // namespace resolab::cli
