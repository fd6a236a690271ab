#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stight::cli {

/// Exit codes: 0 success, 1 parse or validation failure, 2 refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stight::cli
