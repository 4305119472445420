#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schub {

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 2 on input errors, 1 on
/// internal invariant violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace schub
