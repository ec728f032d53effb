#ifndef ORBIBRAID_REP_FILE_HPP_
#define ORBIBRAID_REP_FILE_HPP_

#include <string>

#include <json.hpp>

#include "orbibraid/reflection.hpp"

namespace orbibraid {

  // JSON object with d, m, R, K and optional Rphi, Rphiphi, T, theta, name.
  // Matrices are arrays of rows of scalar strings such as "q - q^-1".
  // Throws ParseError on malformed JSON or scalars and PreconditionError on
  // bad shapes; the data is not validated here.
  RepData        parse_rep(std::string const& text);
  RepData        load_rep(std::string const& path);
  nlohmann::json to_json(RepData const& data);

}  // namespace orbibraid

#endif  // ORBIBRAID_REP_FILE_HPP_
