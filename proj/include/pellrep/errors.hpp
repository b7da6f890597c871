#pragma once

#include <stdexcept>
#include <string>

namespace pellrep {

// Every failure raised by the library derives from Error, so callers that
// only care about "computation failed" can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByIntervalContainingZero : public Error {
 public:
  using Error::Error;
};

class LogOfIntervalTouchingZero : public Error {
 public:
  using Error::Error;
};

// A predicate could not be decided before the precision cap was reached.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// Raised instead of expanding a value that is structurally rational.
class RationalInput : public PrecisionExhausted {
 public:
  using PrecisionExhausted::PrecisionExhausted;
};

class InsufficientExpansion : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class NoFixpoint : public Error {
 public:
  using Error::Error;
};

class EpsilonNeverPositive : public Error {
 public:
  using Error::Error;
};

class ReductionInsufficient : public Error {
 public:
  using Error::Error;
};

}  // namespace pellrep
