#ifndef ORBIBRAID_ERROR_HPP_
#define ORBIBRAID_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbibraid {

  // Base of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A braid word mentions a generator that does not exist for its strand count.
  class MalformedWordError : public Error {
   public:
    using Error::Error;
  };

  // Two operands live on different strand counts / arities.
  class ArityError : public Error {
   public:
    using Error::Error;
  };

  // Operad colors or DSL objects do not fit together.
  class TypingError : public Error {
   public:
    using Error::Error;
  };

  // 1-dimensional embedding data that is not a valid configuration.
  class GeometryError : public Error {
   public:
    using Error::Error;
  };

  // A diagram uses generators its flavor does not have.
  class FlavorError : public Error {
   public:
    using Error::Error;
  };

  // Matrix data violating a structural requirement (dimensions, invertibility).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A candidate representation fails one of the cylinder braid relations.
  class RelationError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace orbibraid

#endif  // ORBIBRAID_ERROR_HPP_
