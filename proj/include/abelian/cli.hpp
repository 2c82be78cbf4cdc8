#ifndef ABELIAN_CLI_HPP
#define ABELIAN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace abelian {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

/// Runs one `abelian` invocation. `args` excludes the program name.
/// Returns kExitOk, kExitUsage (bad flags or values) or kExitIo (unreadable
/// input, unwritable output).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelian

#endif  // ABELIAN_CLI_HPP
