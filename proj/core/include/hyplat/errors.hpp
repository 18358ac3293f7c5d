#pragma once

#include <stdexcept>
#include <string>

namespace hyplat {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid user input (syntax errors, failed validation).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Mathematically well-formed input that falls outside the supported domain
/// (labels whose cosine leaves the multiquadratic universe, non-Lorentzian
/// signatures, algebras without an exact split representation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A consistency assertion failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Syntax error with a position in the offending text.
class ParseError : public InputError {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : InputError(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace hyplat
