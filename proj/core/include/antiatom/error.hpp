#pragma once

#include <stdexcept>
#include <string>

namespace antiatom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad generators, bad gaps, bad family parameters, a set
/// that is not closed under addition, a precondition that does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation refused to start because its search space exceeds the
/// configured limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed (an enumerated candidate was not actually
/// associated to the semigroup, or two methods disagreed).
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace antiatom
