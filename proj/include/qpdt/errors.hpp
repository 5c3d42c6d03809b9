#pragma once

#include <stdexcept>
#include <string>

namespace qpdt {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (b = 0, mu < -1/2,
/// Bessel argument beyond the supported range, excluded preset angle...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Base for failures that happen while computing, not while validating.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An integrand produced a non-finite value at a quadrature node.
class EvaluationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A quadrature request exceeds the node budget.
class ResourceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An iterative node solve did not converge.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A truncated transform-side integral did not decay at its cut-off.
class TailBoundError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Tabulated data was asked for a value outside its domain.
class InterpolationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Finite-difference step outside the supported window.
class StepSizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// File could not be read, written or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpdt
