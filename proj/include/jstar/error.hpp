#pragma once

#include <stdexcept>
#include <string>

namespace jstar {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define JSTAR_DECLARE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

JSTAR_DECLARE_ERROR(NotDivisible);
JSTAR_DECLARE_ERROR(VarSetMismatch);
JSTAR_DECLARE_ERROR(UnknownVariable);
JSTAR_DECLARE_ERROR(InvalidDimension);
JSTAR_DECLARE_ERROR(ValidationFailed);
JSTAR_DECLARE_ERROR(GradingClosureFailure);
JSTAR_DECLARE_ERROR(NotInQ);
JSTAR_DECLARE_ERROR(SingularPairing);
JSTAR_DECLARE_ERROR(NoEquivalence);
JSTAR_DECLARE_ERROR(ParseError);

#undef JSTAR_DECLARE_ERROR

} // namespace jstar
