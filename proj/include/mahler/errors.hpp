#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  size_t position;
  ParseError(const std::string &msg, size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnsupportedRadicalIndex : ParseError {
  using ParseError::ParseError;
};

struct UnsupportedDenominator : Error {
  using Error::Error;
};

struct UnsupportedAlgebraicPoint : Error {
  using Error::Error;
};

struct IncompatibleRadicands : Error {
  using Error::Error;
};

struct ZeroDivision : Error {
  using Error::Error;
};

// zero divisor in a reducible radical ring; witness holds a nonzero factor
// that annihilates the operand
struct NotInvertible : Error {
  std::string witness;
  NotInvertible(const std::string &msg, std::string w)
      : Error(msg), witness(std::move(w)) {}
};

struct NotTorsion : Error {
  using Error::Error;
};

struct WrongKind : Error {
  using Error::Error;
};

struct NotInSupport : Error {
  using Error::Error;
};

struct BadTwist : Error {
  using Error::Error;
};

struct NonRationalResidue : Error {
  using Error::Error;
};

struct InternalVerificationFailure : Error {
  using Error::Error;
};

} // namespace mahler
