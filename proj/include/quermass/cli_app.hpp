#pragma once

// The CLI front end as a library function so tests can drive it in-process.
// Exit codes: 0 all inequalities hold, 1 some inequality failed,
// 2 usage/parse/validation error.

#include <iosfwd>
#include <string>
#include <vector>

namespace quermass::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quermass::cli
