#pragma once

#include <stdexcept>
#include <string>

namespace chev {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad family, parity, range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured computation cap (series order, group size, enumeration
/// count) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An exact division left a remainder, or a solved-for count came out
/// negative. Always an internal defect, never a user error.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace chev
