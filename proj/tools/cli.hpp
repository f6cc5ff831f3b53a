#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permdepth::cli {

/// Runs the command-line tool. All results go to `out`, diagnostics to
/// `err`. Returns the process exit status: 0 on success, nonzero on bad
/// usage, domain errors, or any failed verification.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

/// Same, for callers holding the arguments (without the program name) in
/// a vector.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace permdepth::cli
