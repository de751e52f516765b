#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edom {

// Runs one command line (args exclude the program name). Exit codes: 0 ok,
// 1 domain error or failed verification, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace edom
