#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ospo {

// args excludes the program name. Exit codes: 0 success, 1 a verification
// failed, 2 usage or input error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ospo
