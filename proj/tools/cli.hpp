#ifndef TSR_TOOLS_CLI_HPP
#define TSR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tsr {

// Runs the command-line tool in-process; `args` excludes the program name.
// Exit codes: 0 ok, 1 failed verification, 2 bad usage or bad input,
// 3 order cap exceeded, 4 internal error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tsr

#endif
