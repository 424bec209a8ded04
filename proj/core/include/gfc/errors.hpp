#pragma once

#include <stdexcept>

namespace gfc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands were built over different algebras.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the operation's domain (grade index, dimension,
// generator index, malformed matrix, unnormalized cochain).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The operation needs exact arithmetic (1/k! or exact cancellation) and was
// invoked over binary floats.
class UnsupportedScalarMode : public Error {
 public:
  using Error::Error;
};

}  // namespace gfc
