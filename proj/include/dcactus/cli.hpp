#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dcactus {

// args[0] is the program name. Returns 0 on success, 1 when verification
// fails and 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcactus
