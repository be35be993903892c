#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polyexp/numeric.hpp"

namespace polyexp::cli {

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kParseFailure = 2, kDomainFailure = 3 };

// Runs one subcommand; args exclude the program name. Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3", "-8", "1.5-2i", "-i", "2e-3i". Throws ParseError.
Complex parse_complex(std::string_view text);

}  // namespace polyexp::cli
