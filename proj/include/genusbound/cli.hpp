#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genusbound {

// Exit codes are a stable contract:
//   0 success, 1 input error, 2 precondition violation,
//   3 verification failure, 4 internal error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace genusbound
