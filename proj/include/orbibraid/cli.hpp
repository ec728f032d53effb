#ifndef ORBIBRAID_CLI_HPP_
#define ORBIBRAID_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace orbibraid::cli {

  // Exit codes: 0 ok, 1 check failed, 2 usage / parse / typing error.
  enum Exit { ok = 0, fail = 1, error = 2 };

  // args without the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace orbibraid::cli

#endif  // ORBIBRAID_CLI_HPP_
