#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vortexpaths/special_functions.hpp"
#include "vortexpaths/wave_model.hpp"

namespace vortexpaths {

struct TrajectoryState {
  double t;  ///< time [s]
  double x;  ///< horizontal position [m]
  double z;  ///< height above the bed [m]
};

/// Moving-frame coordinates X = k(x - c t), Z = k z, in which the particle
/// system is autonomous.
struct MovingFrameState {
  double X;
  double Z;
};

enum class SolutionMethod { ReferenceODE, Quadrature, EllipticClosedForm, Peakon };

/// The radicand F(Z) with (dZ/dt)^2 = F(Z) along trajectories:
///   F(Z) = k^2 A^2 sinh^2 Z - [2 beta - k(C-c) Z - (B/2) Z^2]^2,
/// either in full sinh form or with sinh^2 replaced by its even-power
/// truncation (the closed-form elliptic solutions solve the truncated
/// equation, not the full one).
class Radicand {
 public:
  static Radicand full(const VelocityCoefficients& cf, double beta);
  static Radicand truncated(const VelocityCoefficients& cf, double beta, int order);

  double operator()(double Z) const;
  double derivative(double Z) const;
  /// Magnitude of the constituent terms at Z; tolerance reference for
  /// "the radicand vanishes here" style checks.
  double scale(double Z) const;

  double beta() const { return beta_; }
  const VelocityCoefficients& coeffs() const { return coeffs_; }
  bool is_truncated() const { return !poly_.empty(); }

 private:
  Radicand(const VelocityCoefficients& cf, double beta, std::vector<double> poly)
      : coeffs_(cf), beta_(beta), poly_(std::move(poly)) {}
  VelocityCoefficients coeffs_;
  double beta_;
  std::vector<double> poly_;  ///< empty: full sinh form
};

/// A bounded oscillation of Z between two simple roots of the radicand.
struct ZOrbit {
  Radicand radicand;
  double beta;
  double z_min, z_max;  ///< turning points, dimensionless Z
  double period;        ///< T [s], from the singularity-absorbing quadrature
  VelocityCoefficients coeffs;
};

/// One sample of the Z motion.
struct ZSample {
  double t;
  double Z;
  double dZdt;
};

/// Right-hand side of the particle system in physical coordinates.
std::pair<double, double> ode_rhs(const VelocityCoefficients& cf, const TrajectoryState& s);

MovingFrameState to_moving_frame(const VelocityCoefficients& cf, const TrajectoryState& s);

/// Orbit constant from initial data:
///   beta = [k A cos(X0) sinh(Z0) + k(C-c) Z0 + (B/2) Z0^2] / 2,
/// which makes F(Z0) = (k A sinh Z0 sin X0)^2.
double beta_from_initial(const VelocityCoefficients& cf, double X0, double Z0);

/// F(Z) for the orbit's radicand; (dZ/dt)^2 along solutions.
double z_rate_squared(double Z, const ZOrbit& orbit);

/// All roots of F in (z_lo, z_hi]: uniform bracketing scan plus bisection
/// to ~1e-12, tangential (non-crossing) roots included via |F| minima.
std::vector<double> radicand_roots(const Radicand& F, double z_lo, double z_hi, int n_scan = 4096);

/// The orbit interval [z_min, z_max] containing Z_init (which must satisfy
/// F(Z_init) >= 0). Throws NoOrbitError when a bounding root is missing on
/// either side within (0, Z_hi].
std::pair<double, double> turning_points(const Radicand& F, double Z_init, double Z_hi,
                                         int n_scan = 4096);

/// Period of the oscillation governed by (dZ/dt)^2 = F(Z) between simple
/// roots z_min < z_max:
///   T = 2 integral dZ/sqrt(F), evaluated as 4 integral_0^{pi/2} dtheta/sqrt(G)
/// with Z = z_min cos^2 theta + z_max sin^2 theta, which absorbs the
/// inverse-square-root endpoint singularities. Gauss-Legendre panels are
/// doubled until two refinements agree to 1e-12 relative.
double period_of_radicand(const std::function<double(double)>& F, double z_min, double z_max);

/// Finds the turning points around Z_init and computes the period.
ZOrbit make_orbit(const Radicand& F, double Z_init, double Z_hi, int n_scan = 4096);

/// T of an already constructed orbit.
double z_period(const ZOrbit& orbit);

/// Net horizontal displacement over one Z-period: Delta x = c T. Nonzero
/// whenever c != 0, which is exactly why the physical paths fail to close.
double drift_per_period(const VelocityCoefficients& cf, const ZOrbit& orbit);

/// Monotone quarter-period time map t(Z) built by quadrature once, then
/// evaluated at arbitrary t by reflecting the phase at the turning points
/// (sawtooth folding), so no signed square root is ever stitched.
class ZQuadratureSolution {
 public:
  /// Z0 must lie in [z_min, z_max]; sign0 is the initial sign of dZ/dt.
  ZQuadratureSolution(const ZOrbit& orbit, double Z0, int sign0, int knots = 1024);

  ZSample at(double t) const;
  const ZOrbit& orbit() const { return orbit_; }
  /// Half period as accumulated by the time map itself; folding uses this
  /// value so Z(t + period()) == Z(t) holds by construction.
  double half_period() const { return half_period_; }

 private:
  double tau_of_theta(double theta) const;
  double theta_of_tau(double tau) const;
  double z_of_theta(double theta) const;

  ZOrbit orbit_;
  int knots_;
  double dtheta_;
  std::vector<double> tau_;   ///< cumulative time from z_min at theta knots
  std::vector<double> dtau_;  ///< dt/dtheta at knots
  double half_period_;
  double s0_;  ///< phase of t = 0
};

/// Samples Z(t) on the given times through the quadrature inversion.
std::vector<ZSample> invert_z_quadrature(const ZOrbit& orbit, double Z0, int sign0,
                                         std::span<const double> times);

/// Closed-form Z(t) from a Legendre reduction (truncated-radicand dynamics):
///   Case1a: Z = [z2 sn^2(st;m) + z3 cn^2(st;m)]^{-1/2}
///   Case2:  Zhat = z0 - sqrt(z0^2+p z0+q) (1-cn)/(1+cn), Z = Zhat^{-1/2},
/// the latter only while cn exceeds the reduction's validity threshold
/// (throws OutOfValidityWindow otherwise). Case1b has no supported closed
/// form and is rejected.
ZSample closed_form_z_elliptic(double t, const EllipticReduction& red);

/// Period of the Case1a closed form: 2 K(m) / scale.
double elliptic_z_period(const EllipticReduction& red);

/// Peakon-like special solution
///   x(t) = c t + const1,
///   z(t) = (2/k) arctanh(exp(-|k A t + const2|)),
/// exact for B = 0 and C = c; z has a vertical asymptote at
/// k A t + const2 = 0 and decays to the bed as t -> +-inf. The phase
/// k(x - c t) sits on the sin = +-1 rays, flipping across the asymptote;
/// `X` reports the branch-consistent value.
struct PeakonState {
  TrajectoryState state;
  double dzdt;
  double X;
};

/// Throws PeakonValidityError (with the residual of the first moving-frame
/// equation) when B != 0 or C != c, unless `force`; AsymptoteError at the
/// asymptote itself.
PeakonState peakon_state(const VelocityCoefficients& cf, double const1, double const2, double t,
                         bool force = false);

/// Horizontal positions rebuilt from (t, Z, dZ/dt) samples via
///   X = arcsin[(dZ/dt)/(k A sinh Z)], x = c t + X / k,
/// with the arcsin quadrant resolved by continuity and checked against the
/// first moving-frame equation (finite-differenced). Throws
/// BranchAmbiguityError when no branch is consistent.
///
/// When the orbit constant is supplied the quadrant comes from the motion
/// integral instead: cos X has the sign of 2 beta - k(C-c) Z - (B/2) Z^2,
/// which stays well defined even for truncated-dynamics samples whose
/// |dZ/dt| never reaches |k A sinh Z|.
struct XReconstruction {
  std::vector<double> x;
  std::vector<double> X;
};
XReconstruction reconstruct_x(const VelocityCoefficients& cf, std::span<const ZSample> samples,
                              std::optional<double> beta = std::nullopt);

enum class TrajectoryCase { Case1a, Case1b, Case2, HyperellipticOnly, Degenerate };

/// Classification of the order-6 truncated dynamics via the cubic obtained
/// by Zhat = 1/Z^2. Requires C = c for the cubic pathway; anything else is
/// HyperellipticOnly immediately. Case2 (and Case1b) fall back to
/// HyperellipticOnly when the validity window is degenerate.
TrajectoryCase classify_case(const VelocityCoefficients& cf, double beta, int order = 6);

/// The Legendre reduction backing classify_case; throws when the pathway
/// does not apply (C != c, beta = 0, degenerate roots).
EllipticReduction elliptic_reduction_for(const VelocityCoefficients& cf, double beta);

struct Trajectory {
  std::vector<TrajectoryState> samples;
  SolutionMethod method;
  std::optional<ZOrbit> orbit;
  std::optional<double> drift;  ///< per Z-period [m]
};

/// Adaptive Dormand-Prince reference solution of the particle system,
/// sampled at the given times. tol must lie in [1e-12, 1e-6].
Trajectory integrate_reference(const VelocityCoefficients& cf, const TrajectoryState& init,
                               std::span<const double> times, double tol);
Trajectory integrate_reference(const VelocityCoefficients& cf, const TrajectoryState& init,
                               double t_end, double tol, int n_samples);

/// Upper end of the default Z scan window: k h0 (1 + epsilon) + 2, slightly
/// above the linearized column.
double default_scan_limit(const WaveParameters& params);

}  // namespace vortexpaths
