#ifndef ROOKFFT_CLI_HPP_
#define ROOKFFT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rookfft {

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitMath = 4;

// args excludes the program name.  Errors are written to err as a single
// line "error[<kind>]: <message>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rookfft

#endif  // ROOKFFT_CLI_HPP_
