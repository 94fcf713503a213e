#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liefol::cli {

/// Entry point of the `liefol` tool; `args` excludes the program name.
/// Returns 0 when every check passes, 1 when a check fails or a theorem
/// instance is contradicted, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liefol::cli
