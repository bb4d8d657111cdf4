#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supermod {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// More generators or a larger index than the bitmask representation holds.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Matrix / module shapes do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for the given operands.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operation is not defined for this kind of ring.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed one of its own invariants. Indicates an
/// arithmetic bug rather than bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line style request, e.g. an unknown suite name.
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace supermod
