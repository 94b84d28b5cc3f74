#pragma once

#include <vector>

#include "vortexpaths/wave_model.hpp"

namespace vortexpaths {

/// A zero of the stagnation residual f(Z). Zeros of f are exactly the zeros
/// of the trajectory radicand F; simple zeros are turning points of the Z
/// motion, double zeros are genuine equilibria where the particle velocity
/// equals (c, 0) for all time.
enum class StagnationKind { TurningPoint, Equilibrium };

struct StagnationRoot {
  double Z;             ///< root location, dimensionless
  double residual;      ///< |f(Z)| at convergence
  StagnationKind kind;  ///< Equilibrium iff the radicand has a double root here
  double F_derivative;  ///< dF/dZ at the root
};

/// f(Z) = |k A sinh Z| - |2 beta - k(C-c) Z - (B/2) Z^2|
double stagnation_residual(double Z, double beta, const VelocityCoefficients& cf);

/// All roots of f on [0, Z_hi]: uniform scan plus bisection on crossings,
/// with tangential (non-crossing) roots recovered from local minima of |f|
/// below 1e-8 and polished by derivative iteration. Empty list allowed.
std::vector<StagnationRoot> find_z_stagnation(double beta, const VelocityCoefficients& cf,
                                              double Z_hi, int n_scan = 4096);

/// A stagnation point of the velocity field itself: v = 0 on the phase rays
/// sin X = 0, and u = c on one of the two cos X = +-1 branches.
struct FieldStagnationPoint {
  double X;  ///< phase, 0 or pi
  double z;  ///< height [m]
};

/// Bracketing scan + bisection of +-A cosh(k z) + B z + C - c = 0 on each
/// branch, z in (0, z_hi] (bed excluded). Empty list allowed.
std::vector<FieldStagnationPoint> field_stagnation(const VelocityCoefficients& cf, double z_hi,
                                                   int n_scan = 4096);

}  // namespace vortexpaths
