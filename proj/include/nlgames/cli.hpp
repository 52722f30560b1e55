#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlgames {

// The command-line front end, separated from main() so tests can drive it.
// `args` excludes the program name.  Exit codes: 0 success, 1 usage or
// parse error, 2 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlgames
