#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tstab::cli {

// Runs one command line (without the program name). Exit codes: 0 ok,
// 1 domain error or failed check, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tstab::cli
