#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ndmc {

/// Runs the command-line tool in-process. Exit codes: 0 = success (for check
/// and hamiltonian: the property holds), 1 = property does not hold,
/// 2 = any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ndmc
