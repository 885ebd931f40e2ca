#pragma once

#include <stdexcept>
#include <string>

namespace nilrs {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NILRS_DEFINE_ERROR(Name)                     \
  class Name : public Error {                        \
   public:                                           \
    explicit Name(const std::string& what)           \
        : Error(std::string(#Name ": ") + what) {}   \
  }

NILRS_DEFINE_ERROR(DivisionBySomethingContainingCoordinates);
NILRS_DEFINE_ERROR(DivisionByZero);
NILRS_DEFINE_ERROR(NotACoordinate);
NILRS_DEFINE_ERROR(UnboundSymbol);
NILRS_DEFINE_ERROR(DenominatorVanishes);
NILRS_DEFINE_ERROR(ParseError);
NILRS_DEFINE_ERROR(BasisMismatch);
NILRS_DEFINE_ERROR(DegreeOverflow);
NILRS_DEFINE_ERROR(UnknownGroup);
NILRS_DEFINE_ERROR(UnknownFamily);
NILRS_DEFINE_ERROR(ConstraintViolation);
NILRS_DEFINE_ERROR(SignatureNotLorentz);
NILRS_DEFINE_ERROR(NoGroupLaw);
NILRS_DEFINE_ERROR(SingularMetric);
NILRS_DEFINE_ERROR(AnsatzTooLarge);
NILRS_DEFINE_ERROR(NoSolution);
NILRS_DEFINE_ERROR(DegenerateMetric);
NILRS_DEFINE_ERROR(InvalidArgument);

#undef NILRS_DEFINE_ERROR

}  // namespace nilrs
