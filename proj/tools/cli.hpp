#ifndef LORENTZ_TOOLS_CLI_HPP
#define LORENTZ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lorentz::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorentz::cli

#endif  // LORENTZ_TOOLS_CLI_HPP
