//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#ifndef KNOTSEMI_ERRORS_HPP_
#define KNOTSEMI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace knotsemi {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Invalid or out of range parameters (family specs, moduli, lengths).
  class ParameterError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed external input (PD files, counts files).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! A value outside the domain of an operation (letter not in B, t = 0, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! A Reidemeister move whose site does not match the required pattern.
  class MoveError : public Error {
   public:
    using Error::Error;
  };

  //! The word universe of the congruence oracle exceeds the budget.
  class ResourceError : public Error {
   public:
    ResourceError(std::string const& msg, unsigned long long required)
        : Error(msg), _required(required) {}

    [[nodiscard]] unsigned long long required() const noexcept {
      return _required;
    }

   private:
    unsigned long long _required;
  };

  //! A consistency check that can only fail if there is a bug, e.g. an oracle
  //! count strictly below the count of a semigroup it maps onto.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace knotsemi

#endif  // KNOTSEMI_ERRORS_HPP_
