#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hspoly {

/* Command-line driver (also used directly by tests). Exit codes:
 * 0 success, 2 hypothesis/input violation, 3 numeric failure. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hspoly
