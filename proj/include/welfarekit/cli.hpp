#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace welfarekit {

// Runs the command line tool on `args` (excluding the program name), writing
// human output to `out` and diagnostics to `err`.
// Exit codes: 0 = success / axiom holds / contradiction established,
//             1 = violation found / contradiction not established / mismatch,
//             2 = malformed input or bad flags.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace welfarekit
