#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lapdiam {

/// Entry point behind the `lapdiam` executable. `args` excludes the program name.
/// Returns the process exit status (0 clean, 1 usage, 2/3/4 per scan outcome).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lapdiam
