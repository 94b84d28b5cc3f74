#pragma once

#include <stdexcept>
#include <string>

namespace vortexpaths {

/// Base class for all library-specific failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or violated input invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure at run time (as opposed to bad inputs).
class NumericsError : public Error {
 public:
  using Error::Error;
};

/// The radicand has no sign change in the scanned range: the motion in Z is
/// unbounded or sits at an equilibrium, so no periodic orbit exists.
class NoOrbitError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

/// Adaptive step control shrank the step below the representable floor.
class StepSizeUnderflow : public NumericsError {
 public:
  StepSizeUnderflow(const std::string& what, double t) : NumericsError(what), t_fail(t) {}
  double t_fail;
};

/// Evaluation requested at the vertical asymptote of the peakon solution.
class AsymptoteError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

/// The peakon formula is an exact solution only for B = 0 and C = c;
/// carries the size of the first-equation residual that would remain.
class PeakonValidityError : public NumericsError {
 public:
  PeakonValidityError(const std::string& what, double r) : NumericsError(what), residual(r) {}
  double residual;
};

/// Closed-form elliptic evaluation requested outside the time window on
/// which the reduction stays real. `value` is the offending sn^2 or cn
/// value, `threshold` the bound it violated.
class OutOfValidityWindow : public NumericsError {
 public:
  OutOfValidityWindow(const std::string& what, double v, double thr)
      : NumericsError(what), value(v), threshold(thr) {}
  double value;
  double threshold;
};

/// Neither arcsin quadrant candidate is consistent with the moving-frame
/// equations when rebuilding x(t) from (Z, dZ/dt) samples.
class BranchAmbiguityError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

/// File-system failure while writing results.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vortexpaths
