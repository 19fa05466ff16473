#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbzeta {

/// Exit codes: 0 ok, 1 failed check or internal error, 2 usage or invalid
/// input, 3 size guard.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbzeta
