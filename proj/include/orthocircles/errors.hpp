#pragma once

#include <stdexcept>
#include <string>

namespace orthocircles {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ORTHOCIRCLES_DEFINE_ERROR(Name)  \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

/// Two circles touch; the arrangement model forbids tangency.
ORTHOCIRCLES_DEFINE_ERROR(TangencyError);
ORTHOCIRCLES_DEFINE_ERROR(DegenerateImageError);
/// Parameters outside the domain of a construction (e.g. fewer than 5 satellites).
ORTHOCIRCLES_DEFINE_ERROR(DomainError);
ORTHOCIRCLES_DEFINE_ERROR(GenerationError);
ORTHOCIRCLES_DEFINE_ERROR(AugmentationError);
ORTHOCIRCLES_DEFINE_ERROR(PerturbationError);
/// The straight-line drawing has crossing edges.
ORTHOCIRCLES_DEFINE_ERROR(NotPlaneError);
/// Two arrangement vertices coincide, so a cell census would be ambiguous.
ORTHOCIRCLES_DEFINE_ERROR(NonGenericError);
ORTHOCIRCLES_DEFINE_ERROR(MissingRedError);
ORTHOCIRCLES_DEFINE_ERROR(InvalidArrangementError);
ORTHOCIRCLES_DEFINE_ERROR(ParseError);

#undef ORTHOCIRCLES_DEFINE_ERROR

}  // namespace orthocircles
