// cli.hpp -- command dispatcher behind the ietw executable

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ietw {

/// Runs one command; `args` excludes the program name.
/// Returns 0 on success or a true answer, 1 on a false answer, 2 on usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ietw
