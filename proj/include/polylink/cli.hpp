/* Apache License, Version 2.0 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polylink {

/// Command-line front end. Subcommands: validate | classify | visible |
/// path | linkdist | poldiam | gen. Returns 0 on success, 1 on domain
/// errors, 2 on usage errors. POLYLINK_SEED overrides the default seed 0
/// when --seed is not given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polylink
