#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace socstable {

// Full command-line surface (solve, exact, check, reduce, extract, gen,
// bench) as an in-process call so tests can capture output. `args` excludes
// the program name. Exit codes: 0 success, 1 check found the matching
// unstable, 2 parse/validation/usage errors, 3 size guards.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace socstable
