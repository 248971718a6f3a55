#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncd {

/// Runs the `nc` command line. `args` excludes the program name.
/// Returns 0 on PASS/success, 1 on FAIL or counterexample, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncd
