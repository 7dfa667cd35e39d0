#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgw::cli {

enum ExitCode : int { kPass = 0, kAssertion = 1, kParse = 2, kCap = 3, kUnsupportedField = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgw::cli
