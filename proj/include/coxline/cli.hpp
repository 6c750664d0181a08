#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxline {

/// Runs the command-line front end. `args` excludes the program name.
/// Returns the process exit code: 0 success, 2 infeasible design or bad
/// input, 3 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shared with tests: parses "a,b,c" and "start:stop:step" grids.
std::vector<double> parse_eta_grid(const std::string& spec);
std::vector<long long> parse_int_list(const std::string& text);

}  // namespace coxline
