#ifndef ORBIBRAID_DSL_HPP_
#define ORBIBRAID_DSL_HPP_

#include <string>

#include "orbibraid/morphisms.hpp"
#include "orbibraid/objects.hpp"

namespace orbibraid {

  enum class Flavor { monoidal, braided, symmetric };

  std::string to_string(Flavor f);
  Flavor      parse_flavor(std::string const& s);

  // Throws ParseError (syntax, unknown names) or TypingError.
  MorExpr parse_mor(std::string const& text);

  struct Diagram {
    std::string name;
    MorExpr     lhs;
    MorExpr     rhs;
    Flavor      flavor = Flavor::braided;
  };

  // key=value lines (lhs, rhs, flavor, optional name); '#' starts a comment,
  // lines not starting with a key continue the previous value.
  Diagram parse_diagram(std::string const& text);
  Diagram load_diagram(std::string const& path);

  std::string to_string(Diagram const& d);

}  // namespace orbibraid

#endif  // ORBIBRAID_DSL_HPP_
