#ifndef OMU_CLI_HPP
#define OMU_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace omu {

/// Full command-line front end. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`; the return value is the
/// process exit code (0 iff all requested checks passed).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omu

#endif
