#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hilbrad::cli {

/// Exit codes: 0 success, 1 domain error (or a failed check), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbrad::cli
