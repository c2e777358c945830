#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ks::cli {

// Runs one subcommand. args excludes the program name. Results go to out,
// diagnostics to err. Returns 0 on success or a true verdict, 1 on a false
// verdict, 2 on usage or parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ks::cli
