#pragma once

#include "qcount/gfq.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qcount::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kInternal = 3,
};

/// Parses the zcount matrix format `p,m;row;row;...`, rows holding
/// whitespace-separated element indices. Throws ParseError or
/// DimensionMismatch.
MatGF parse_matrix(const std::string& text);

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcount::cli
