#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beurling::cli {

// Exit codes besides the report statuses (0, 2, 3).
inline constexpr int exit_usage = 1;

// args excludes the program name.  Reports go to out (or --report PATH), diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace beurling::cli
