#pragma once

#include <stdexcept>
#include <string>

namespace grs {

/// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GRS_DEFINE_ERROR(Name)                       \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  };

GRS_DEFINE_ERROR(NotRational)
GRS_DEFINE_ERROR(DivisionByZero)
GRS_DEFINE_ERROR(NotPrime)
GRS_DEFINE_ERROR(ZeroElement)
GRS_DEFINE_ERROR(NoOrderWithinBound)
GRS_DEFINE_ERROR(SignatureMismatch)
GRS_DEFINE_ERROR(ParseError)
GRS_DEFINE_ERROR(ValidationError)
GRS_DEFINE_ERROR(Inconsistent)
GRS_DEFINE_ERROR(Underdetermined)
GRS_DEFINE_ERROR(UnassignedClass)
GRS_DEFINE_ERROR(BadPattern)
GRS_DEFINE_ERROR(TooLarge)
GRS_DEFINE_ERROR(PreconditionFailed)

#undef GRS_DEFINE_ERROR

}  // namespace grs
