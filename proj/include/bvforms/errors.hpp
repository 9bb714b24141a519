#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bvf {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different numbers of Darboux pairs.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument was violated (wrong generator kind,
// non-function input where a function is required, n out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidCoordinateChange : public Error {
 public:
  using Error::Error;
};

class OperatorLeavesSlice : public Error {
 public:
  using Error::Error;
};

class NonInvertibleD : public Error {
 public:
  using Error::Error;
};

// A machine check disagreed with the identity it was verifying.
class MismatchAgainstTheorem : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bvf
