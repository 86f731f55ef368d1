#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lattice_equiv {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;  // not equivalent / not found
inline constexpr int usage = 2;
inline constexpr int input = 3;
}  // namespace exit_code

/// Runs one invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lattice_equiv
