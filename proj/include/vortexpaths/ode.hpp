#pragma once

#include <array>
#include <functional>
#include <vector>

namespace vortexpaths {

/// Right-hand side of a two-dimensional autonomous-in-shape system
/// y' = f(t, y). Used for the particle system (x, z) and for the
/// moving-frame system (X, Z).
using Rhs2 = std::function<std::array<double, 2>(double t, const std::array<double, 2>& y)>;

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 1e-3;
  double max_step = 0.0;  ///< 0 = unlimited
  long max_steps = 20'000'000;
};

struct OdeSample {
  double t;
  std::array<double, 2> y;
};

/// Adaptive embedded Dormand-Prince 5(4) integration from (t0, y0) through
/// the strictly increasing `sample_times` (each hit exactly by clipping the
/// step). Throws StepSizeUnderflow when the controller collapses, with the
/// failure time attached.
std::vector<OdeSample> integrate_dopri5(const Rhs2& rhs, double t0,
                                        const std::array<double, 2>& y0,
                                        const std::vector<double>& sample_times,
                                        const OdeOptions& options = {});

}  // namespace vortexpaths
