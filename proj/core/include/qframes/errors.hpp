#pragma once

#include <stdexcept>
#include <string>

namespace qframes {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or measure-space mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

/// Inversion of the zero quaternion.
struct ZeroDivisorError : Error {
  using Error::Error;
};

/// unembed() received a complex matrix violating the 2x2 block pattern.
struct EmbeddingPatternError : Error {
  using Error::Error;
};

/// Embedded spectrum failed the even-multiplicity pairing check; indicates
/// a bug in the embedding path, not bad user input.
struct PairingError : Error {
  using Error::Error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

/// Douglas factorization requested for a pair violating range inclusion.
struct FactorizationError : Error {
  FactorizationError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

/// No finite majorization constant exists (kernel criterion failed).
struct InfeasibleError : Error {
  using Error::Error;
};

/// An operation's stated precondition does not hold for the inputs.
struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed instance file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qframes
