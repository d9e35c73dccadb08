#ifndef LEEWB_ERRORS_HPP_
#define LEEWB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leewb {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed word or identity text. `position()` is a byte offset into the
  //! input.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), _pos(pos) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

  //! A precondition on the arguments of an operation was violated.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! A multiplication table failed validation (associativity, identity,
  //! zero, or generator claims).
  class InvalidAlgebra : public Error {
   public:
    using Error::Error;
  };

  //! A configured memory or solution budget was exceeded.
  class ResourceLimit : public Error {
   public:
    using Error::Error;
  };

}  // namespace leewb

#endif  // LEEWB_ERRORS_HPP_
