#ifndef PET_CLI_HPP
#define PET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pet {

// Runs the command-line front end.  args excludes the program name.
// Exit codes: 0 ok/found, 1 usage or domain error, 2 internal
// inconsistency (a verifier failed), 3 proven non-existence, 4 budget
// exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pet

#endif
