#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace talg::cli {

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Writes the JSON report to `out` and a human summary to
/// `err`. Returns 0 on pass, 1 on any axiom/theorem violation, 2 on
/// input/usage errors (bad documents, unreadable files, exceeded guards).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace talg::cli
