#pragma once

#include <stdexcept>
#include <string>

namespace wittlab {

// Base for every failure raised by the library. Semantic verdicts (a map that
// fails Leibniz, an inconsistent set of generator images, a non-zero
// rigidity intersection) are results, not exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class MixedAlgebras : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IndexOutOfDomain : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TruncationTooSmall : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class WindowTooSmall : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotADerivation : public Error {
 public:
  using Error::Error;
};

}  // namespace wittlab
