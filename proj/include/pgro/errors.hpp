#ifndef PGRO_ERRORS_HPP
#define PGRO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgro {

/// Base of everything the library throws. `exit_code()` is what the CLI
/// returns when the error escapes to the top level.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 2; }
};

/// Bad input: dimension or modulus mismatch, unparseable file, bad flag.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotAPGroup : public InputError {
 public:
  using InputError::InputError;
};

class TooLarge : public InputError {
 public:
  using InputError::InputError;
};

class MalformedTable : public InputError {
 public:
  using InputError::InputError;
};

class EmptyGroup : public InputError {
 public:
  using InputError::InputError;
};

class NotGenerating : public InputError {
 public:
  using InputError::InputError;
};

class TooLargeForOracle : public InputError {
 public:
  using InputError::InputError;
};

/// A mathematical invariant failed. Always a bug (or bad generator data
/// that slipped past validation).
class InternalError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

}  // namespace pgro

#endif  // PGRO_ERRORS_HPP
