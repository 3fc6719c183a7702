#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twinlab::cli {

/// Runs one twinlab invocation. `args` excludes the program name.
/// Returns 0 on success or a true property, 1 when the checked property is
/// false, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twinlab::cli
