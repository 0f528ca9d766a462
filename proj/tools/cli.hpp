#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hdradix::cli {

// Runs one CLI invocation (argv without the program name). Data goes to
// `out`, diagnostics to `err`. Returns the process exit code:
//   0  success / base valid
//   1  base invalid (or a domain error ruled the input out)
//   2  paper and empirical verdicts disagree (witness printed)
//   3  digit extraction entered a cycle
//   4  the base has no contraction
//   64 malformed invocation or unparsable input
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hdradix::cli
