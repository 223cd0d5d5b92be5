#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class InvalidPolynomial : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

/// Operation tables fail a ring or module axiom.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// Two operands belong to different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (e.g. a proper ideal was required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ExpansionError : public Error {
 public:
  using Error::Error;
};

class HomError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a ring, expansion or query expression.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ringlab
