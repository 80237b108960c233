#ifndef FSC_CLI_HPP
#define FSC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fsc {

/// Runs one command line (without argv[0]).  Writes the single-line JSON
/// result (or CSV/SVG where requested) to `out`; diagnostics go to `err`.
/// Exit codes: 0 verdict computed (true or false), 2 usage error, 3 module
/// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsc

#endif
