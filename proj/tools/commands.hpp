#ifndef FOLIATE_COMMANDS_HPP
#define FOLIATE_COMMANDS_HPP

#include <iosfwd>

namespace foliate {

// Parses the command line and runs one subcommand. Returns 0 on success, 1 when the analysis
// fails (a JSON error object is printed) and 2 on usage errors.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace foliate

#endif
