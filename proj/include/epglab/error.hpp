#pragma once

#include <stdexcept>
#include <string>

namespace epglab {

/// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (specs, tables, graphs, options).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size or time limit was hit.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked to act on a group outside its hypotheses.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure: a construction produced something that does
// not verify. Carries a human-readable witness.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace epglab
