#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gk0::cli {

/// Runs one `gamma-k0` invocation; args exclude the program name.
/// Returns 0 on success or a true verdict, 1 on a false or refuted verdict, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gk0::cli
