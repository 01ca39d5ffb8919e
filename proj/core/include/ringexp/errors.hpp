#pragma once

#include <stdexcept>
#include <string>

namespace ringexp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured bound (ring order, lattice size, search space) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input does not satisfy a structural law (not a ring, not an ideal, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside of its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Objects attached to different host rings or spaces were combined.
class HostMismatch : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Raised only on implementation bugs.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ringexp
