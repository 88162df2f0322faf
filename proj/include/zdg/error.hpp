// zdg - zero-divisor graphs of finite commutative semigroups

#ifndef ZDG_ERROR_HPP_
#define ZDG_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string, to_string

namespace zdg {

  //! Base class of every exception thrown by zdg.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when an instance exceeds a configured size cap.
  class TooLarge : public Error {
   public:
    using Error::Error;
  };

  //! Thrown by the text readers; carries the 1-based line number.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace zdg

#endif  // ZDG_ERROR_HPP_
