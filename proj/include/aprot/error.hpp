#pragma once

#include <stdexcept>
#include <string>

namespace aprot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (network file, dataset, model, config).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A cross-reference names an element that does not exist.
class ReferenceError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: singular system, non-convergence, rank deficiency.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A precondition on arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A path, flag or command-line argument is unusable.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace aprot
