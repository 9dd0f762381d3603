#pragma once

#include <stdexcept>
#include <string>

namespace supermorita {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct SignatureMismatch : Error {
  using Error::Error;
};
struct NonHomogeneousRelations : Error {
  using Error::Error;
};
struct NonHomogeneousInput : Error {
  using Error::Error;
};
struct InvalidAlgebra : Error {
  using Error::Error;
};
struct FlagNotSet : Error {
  using Error::Error;
};
struct NotProjective : Error {
  using Error::Error;
};
struct NotProgenerator : Error {
  using Error::Error;
};
struct NotAzumaya : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};

// Raised when an internal consistency assertion fails (e.g. a map that must
// descend to a tensor quotient does not). Indicates a bug, not bad input.
struct IllDefined : Error {
  using Error::Error;
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw IllDefined(msg);
}

}  // namespace supermorita
