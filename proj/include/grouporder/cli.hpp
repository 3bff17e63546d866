#ifndef GROUPORDER_CLI_HPP
#define GROUPORDER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace grouporder {

// Command-line front end. Returns 0 on success, 1 on a domain error, 2 on a
// usage error; output is deterministic for fixed arguments and seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grouporder

#endif // GROUPORDER_CLI_HPP
