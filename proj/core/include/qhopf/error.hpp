#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Rewriting did not reach a normal form within the step budget.
class Divergence : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by parse_element; carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public ParseError {
 public:
  using ParseError::ParseError;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class HypothesisOutOfRange : public Error {
 public:
  using Error::Error;
};

class PresetInvalid : public Error {
 public:
  using Error::Error;
};

class TermBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qhopf
