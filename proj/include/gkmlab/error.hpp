#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown vertex, unparsable rational, bad catalog spec.
class InputError : public Error {
 public:
  using Error::Error;
};

// Operands built over different ambient spaces.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition does not hold (zero linear form, non-polarizing
// vector, cyclic orientation, repeated Vandermonde node, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed. Indicates a bug or a
// genericity violation in the input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gkm
