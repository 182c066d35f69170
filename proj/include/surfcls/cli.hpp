#pragma once

// Command-line front end.  Exit status: 0 ok, 1 domain error, 2 usage or
// parse error.  Every diagnostic line starts with an E_* code.

#include <iosfwd>
#include <string>
#include <vector>

namespace surfcls {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfcls
