#pragma once

#include <stdexcept>
#include <string>

namespace linrec {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied outside its mathematical domain
/// (non-monic divisor, non-unit inverse, out-of-range index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings, or have incompatible shapes.
class RingMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The operation needs a ring kind it was not given (e.g. a finite ring
/// for periodicity, an artinian ring for the D + R decomposition).
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

/// Malformed external input: JSON descriptors, polynomial strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace linrec
