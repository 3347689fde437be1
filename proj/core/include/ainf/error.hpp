#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic misuse: division by zero, mixing scalars of different fields.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data violating its precondition
/// (non-composable chain, open morphism passed to cone, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `where` is a JSON-pointer style location.
class InputError : public Error {
 public:
  InputError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace ainf
