#ifndef ACGB_DRIVER_HPP
#define ACGB_DRIVER_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace acgb {

// Subcommand dispatch for the command-line tool. Exit codes: 0 ok, 2 parse
// or usage, 3 mathematical-domain error, 4 resource or infiniteness.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acgb

#endif
