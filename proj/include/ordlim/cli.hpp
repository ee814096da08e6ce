#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordlim {

/// Runs one command line (without the program name).
/// Returns 0 on success, 1 on usage errors and 2 on computation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordlim
