#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treeq::cli {

/// Runs one CLI invocation. `args` excludes the program name. Payload goes
/// to `out` (or the file named by --out), diagnostics to `err`.
/// Exit codes: 0 success, 1 domain error, 2 usage error. Usage errors never
/// produce partial payloads, and identical arguments yield byte-identical
/// output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeq::cli
