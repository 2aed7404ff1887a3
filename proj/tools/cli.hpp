#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthoproof::cli {

// Runs one command line (args excludes the program name). Exit codes: 0 for
// success, validity or acceptance; 1 for rejection or a countermodel; 2 for
// usage and input errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orthoproof::cli
