#pragma once

#include <stdexcept>

namespace gridverify {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input file could not be parsed; message carries "path:line: reason".
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Inputs violate a documented precondition (dimensions, ranges, flags).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The line support does not connect every bus to a substation, so the
/// voltage sensitivity matrices are singular.
class SingularTopology : public Error {
 public:
  using Error::Error;
};

/// The effective injection covariance of the simplified model failed the
/// positive-definite factorization.
class SingularSigmaAlpha : public Error {
 public:
  using Error::Error;
};

/// Fewer than two voltage rows: no differences can be formed.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Step-size backtracking hit its cap without leaving the infeasible region.
class StepSizeCollapse : public Error {
 public:
  using Error::Error;
};

/// No spanning forest exists over the candidate lines.
class DisconnectedInfrastructure : public Error {
 public:
  using Error::Error;
};

/// Two vectors that must have equal length do not.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace gridverify
