#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace a2act {

// Exit codes: 0 success, 1 internal inconsistency, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace a2act
