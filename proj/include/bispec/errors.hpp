#pragma once

#include <stdexcept>
#include <string>

namespace bispec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A NaN or infinite value was offered to the algebra.
class InvalidValueError : public Error {
 public:
  using Error::Error;
};

/// Inversion of a nonzero zero divisor.
class NullConeError : public Error {
 public:
  using Error::Error;
};

/// Inversion of zero.
class ZeroDivisionError : public Error {
 public:
  using Error::Error;
};

/// Kets or matrices of incompatible sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NotSelfAdjointError : public Error {
 public:
  using Error::Error;
};

/// The Jacobi iteration hit its sweep limit before the off-diagonal mass fell
/// below tolerance. `residual()` is the largest eigen-equation residual of the
/// last iterate.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace bispec
