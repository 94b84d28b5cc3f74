#pragma once

#include <variant>
#include <vector>

#include "vortexpaths/wave_model.hpp"

namespace vortexpaths {

/// Three distinct real roots, strictly sorted z1 < z2 < z3.
struct ThreeRealRoots {
  double z1, z2, z3;
};

/// One real root z0 plus the irreducible residual quadratic x^2 + p x + q
/// (p^2 - 4q < 0) of the monic deflation.
struct OneRealRoot {
  double z0, p, q;
};

/// A double (or triple) root was detected within tolerance; the reductions
/// downstream never treat the tangency case, so it is reported as is.
struct DegenerateRoots {
  double z;  ///< location of the repeated root
};

using CubicRoots = std::variant<ThreeRealRoots, OneRealRoot, DegenerateRoots>;

enum class EllipticCase { Case1a, Case1b, Case2, HyperellipticOnly };

/// Validity windows narrower than this fraction of the sn^2/cn range count
/// as degenerate: the closed form then covers no usable stretch of time.
inline constexpr double kEllipticWindowTol = 0.01;

/// Data of the Legendre normal-form reduction of
///   integral dZhat / sqrt(cubic(Zhat)).
struct EllipticReduction {
  EllipticCase kind;
  double modulus_sq;          ///< parameter m = k^2, in (0,1)
  double scale;               ///< positive amplitude of the time argument
  CubicRoots roots;           ///< underlying cubic classification
  double validity_threshold;  ///< rhs of the window inequality; NaN if none
};

/// Arithmetic-geometric mean of a, b >= 0.
double agm(double a, double b);

/// Complete elliptic integral of the first kind, parameter convention:
/// K(m) = pi / (2 agm(1, sqrt(1-m))). K(1) = +inf.
double elliptic_K(double m);

/// Incomplete elliptic integral of the first kind,
///   F(phi, m) = integral_0^phi dtheta / sqrt(1 - m sin^2 theta),
/// for any real phi (quasi-periodic extension F(phi + pi) = F(phi) + 2K)
/// and parameter m in [0, 1]. Computed by the ascending-amplitude AGM
/// recurrence (Abramowitz & Stegun 17.6); accuracy ~1e-15 relative.
double elliptic_F(double phi, double m);

struct JacobiTriple {
  double sn, cn, dn;
};

/// Jacobi elliptic functions for real argument and parameter m in [0, 1],
/// by the descending-Landen AGM chain with backward phase recovery
/// (Abramowitz & Stegun 16.4). dn is formed as sqrt(1 - m sn^2).
JacobiTriple jacobi_sn_cn_dn(double u, double m);

/// Classifies the real roots of c3 x^3 + c2 x^2 + c1 x + c0 (c3 != 0).
/// Closed-form seeds (trigonometric / Cardano) polished by Newton steps;
/// roots closer than ~1e-10 are reported as DegenerateRoots.
CubicRoots solve_cubic_real(double c3, double c2, double c1, double c0);

/// Coefficients (ascending powers of Z, size order+1) of the polynomial
/// radicand obtained by expanding
///   k^2 A^2 sinh^2(Z) - [2 beta - k(C-c) Z - (B/2) Z^2]^2
/// in powers of Z and truncating at the (even) degree `order` >= 4:
///   -4 beta^2 + 4 k(C-c) beta Z + [k^2A^2 + 2 beta B - k^2(C-c)^2] Z^2
///   - B k(C-c) Z^3 + (k^2A^2/3 - B^2/4) Z^4 + 2 k^2A^2/45 Z^6 + ...
std::vector<double> sextic_coefficients(const VelocityCoefficients& cf, double beta, int order);

/// Reduction for 0 < z1 < z2 < z3 (all roots positive):
///   m = (z3 - z2)/(z3 - z1), scale = 2 |beta| sqrt(z3 - z1).
/// Requires beta != 0; throws std::domain_error on pattern mismatch.
EllipticReduction reduce_case1a(const ThreeRealRoots& roots, double beta);

/// Reduction for the remaining patterns:
///  - ThreeRealRoots with z1 < z2 < 0 < z3: tagged Case1b with
///    validity window sn^2 < z3/(z3 - z2); degenerate windows are tagged
///    HyperellipticOnly.
///  - OneRealRoot: Case2 with
///    m = (1 + (z0 + p/2)/sqrt(z0^2 + p z0 + q))/2,
///    scale = 4 |beta| (z0^2 + p z0 + q)^{1/4},
///    window cn > (sqrt(z0^2+p z0+q) - z0)/(sqrt(z0^2+p z0+q) + z0).
EllipticReduction reduce_case1b_or_case2(const CubicRoots& roots, double beta);

}  // namespace vortexpaths
