#pragma once

#include <stdexcept>
#include <string>

namespace nihoperm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested extension degree is odd, too small, or above the size cap.
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A family's parameter constraint does not hold. The message names the
/// violated condition, e.g. "condition (ii) gcd(e+l-2s,2^m+1)=1 failed".
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive engine was asked to run above its configured size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (hex elements, polynomial term lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nihoperm
