#pragma once

#include <utility>

namespace vortexpaths {

/// Which background state the small-amplitude expansion is made around.
///  - StillWater: quiescent water, the constant vorticity scales with the
///    amplitude parameter epsilon.
///  - ShearFlow: laminar current u = omega0 z + alpha, the vorticity stays
///    unscaled.
enum class Linearization { StillWater, ShearFlow };

/// Branch of the dispersion relation: right-going (+) or left-going (-).
enum class RootSign { Plus, Minus };

/// Physical inputs of the linear wave problem. SI units throughout;
/// the water density is set to 1, so pressures come out in Pa per unit
/// density.
struct WaveParameters {
  double g = 9.8;          ///< gravitational acceleration [m/s^2]
  double h0 = 1.0;         ///< undisturbed depth [m]
  double k = 1.0;          ///< wave number 2*pi/lambda [1/m]
  double epsilon = 0.1;    ///< amplitude parameter a/h0, in (0,1)
  double omega0 = 0.0;     ///< constant vorticity [1/s]
  double alpha = 0.0;      ///< shear-flow constant (ShearFlow only)
  double c_bg = 0.0;       ///< background constant c0 (StillWater) or
                           ///< the corresponding shear-flow constant
  double p0 = 101325.0;    ///< atmospheric pressure [Pa]
  Linearization linearization = Linearization::ShearFlow;
  RootSign root_sign = RootSign::Plus;

  /// Throws std::domain_error unless g, h0, k > 0 and 0 < epsilon < 1.
  void validate() const;

  /// Copy of `base` with c_bg solved so the uniform drift C equals the wave
  /// speed c. The elliptic reductions of the trajectory equation need C = c.
  static WaveParameters with_C_equal_c(WaveParameters base);
};

/// The (A, B, C, c, k) quintuple that fully determines the particle
/// dynamics:
///   u = A cosh(k z) cos[k(x - c t)] + B z + C
///   v = A sinh(k z) sin[k(x - c t)]
struct VelocityCoefficients {
  double A;  ///< velocity amplitude [m/s]; nonzero whenever omega0 != 0
  double B;  ///< shear coefficient [1/s]
  double C;  ///< uniform background drift [m/s]
  double c;  ///< wave speed [m/s]
  double k;  ///< wave number [1/m]
};

/// One evaluation of the linear solution fields.
struct FieldSample {
  double eta;  ///< surface elevation [m]
  double p;    ///< pressure [Pa]
  double u;    ///< horizontal velocity [m/s]
  double v;    ///< vertical velocity [m/s]
};

/// Still-water dispersion: c = +-sqrt(g tanh(k h0)/k), sign per root_sign.
double wave_speed_still(const WaveParameters& params);

/// Shear-flow dispersion:
///   c = h0 w0 + alpha sqrt(g h0)
///       + (1/2k) [ -w0 tanh(k h0) +- sqrt(w0^2 tanh^2(k h0) + 4 g k tanh(k h0)) ].
/// Independent of the sign of omega0, the Minus branch makes
/// c - h0 omega0 - alpha sqrt(g h0) negative and the Plus branch positive.
double wave_speed_shear(const WaveParameters& params);

/// Dispatches on params.linearization.
double wave_speed(const WaveParameters& params);

/// Builds the velocity-field coefficient set for the selected linearization.
VelocityCoefficients coefficients(const WaveParameters& params);

/// Velocity (u, v) at a point. No clamping: evaluation outside the water
/// column is permitted (linear theory extends the formulas); use
/// in_column() to flag it.
std::pair<double, double> velocity_field(const VelocityCoefficients& cf, double x, double z,
                                         double t);

/// eta = epsilon h0 cos[k(x - c t)]
double surface_elevation(const WaveParameters& params, double c, double x, double t);

/// Pressure of the linear solution; the expression differs between the two
/// linearizations.
double pressure_field(const WaveParameters& params, const VelocityCoefficients& cf, double x,
                      double z, double t);

/// Bundles eta, p, u, v at one point.
FieldSample field_sample(const WaveParameters& params, const VelocityCoefficients& cf, double x,
                         double z, double t);

/// True when 0 <= z <= h0 + eta(x, t).
bool in_column(const WaveParameters& params, double c, double x, double z, double t);

}  // namespace vortexpaths
