#ifndef GRAPHLIM_CLI_HPP
#define GRAPHLIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace graphlim::cli {

// Dispatches one command line (without the program name). Normal output goes
// to `out`, diagnostics to `err`. Returns 0 on success (and on positive
// verdicts), 1 on domain/capacity errors and negative verdicts, 2 on parse
// failure. Deterministic given the full argument vector, including --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace graphlim::cli

#endif
