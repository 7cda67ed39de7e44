#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eprgame {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

// Runs the command line `args` (without the program name), writing the
// report to `out` (or to --output) and diagnostics to `err`. Returns 0 on
// pass/feasible, 1 on fail/infeasible and 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eprgame
