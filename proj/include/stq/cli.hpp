#ifndef STQ_CLI_HPP
#define STQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace stq {

/// Command-line front end. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`. Returns the process exit status:
/// 0 success / all checks passed, 1 at least one check failed, 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace stq

#endif
