#include "vortexpaths/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vortexpaths {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_parameter(double m) {
  if (!(m >= 0.0 && m <= 1.0))
    throw std::domain_error("elliptic parameter m must lie in [0,1]");
}

}  // namespace

double agm(double a, double b) {
  // Quadratic convergence; 40 iterations is far more than double needs,
  // the early exit fires after ~8.
  for (int i = 0; i < 40; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    if (std::abs(an - bn) <= 1e-17 * an) return an;
    a = an;
    b = bn;
  }
  return 0.5 * (a + b);
}

double elliptic_K(double m) {
  check_parameter(m);
  if (m == 1.0) return std::numeric_limits<double>::infinity();
  return kPi / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

double elliptic_F(double phi, double m) {
  check_parameter(m);
  if (m == 0.0) return phi;
  if (m == 1.0) {
    // F(phi, 1) = atanh(sin phi), divergent at |phi| = pi/2 and beyond.
    if (std::abs(phi) >= kPi / 2.0)
      return phi > 0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity();
    return std::atanh(std::sin(phi));
  }
  // Reduce to |phi| <= pi/2 with F(phi + n pi) = F(phi) + 2 n K.
  const double n = std::floor((phi + kPi / 2.0) / kPi);
  double phi_r = phi - n * kPi;
  double complete = 0.0;
  if (n != 0.0) complete = 2.0 * n * elliptic_K(m);

  // Ascending-amplitude AGM: a_{j+1} = (a_j+b_j)/2, b_{j+1} = sqrt(a_j b_j),
  // tan(phi_{j+1} - phi_j) = (b_j/a_j) tan(phi_j) with phi_{j+1} ~ 2 phi_j.
  // Then F = lim phi_j / (2^j a_j).
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double phi_j = phi_r;
  double twopow = 1.0;
  for (int i = 0; i < 40; ++i) {
    // delta is congruent to atan((b/a) tan phi_j) mod pi, picked nearest to
    // phi_j so the amplitude roughly doubles each step.
    const double d = std::atan2(b * std::sin(phi_j), a * std::cos(phi_j));
    const double delta = d + kPi * std::round((phi_j - d) / kPi);
    phi_j += delta;
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    twopow *= 2.0;
    if (std::abs(a - b) <= 1e-17 * an) {
      a = an;
      break;
    }
    a = an;
    b = bn;
  }
  return complete + phi_j / (twopow * a);
}

JacobiTriple jacobi_sn_cn_dn(double u, double m) {
  check_parameter(m);
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1.0) {
    const double s = std::tanh(u);
    const double c = 1.0 / std::cosh(u);
    return {s, c, c};
  }

  // Keep the forward amplitude 2^N a_N u moderate for large arguments.
  const double quarter4 = 4.0 * elliptic_K(m);
  if (std::abs(u) > quarter4) u -= quarter4 * std::floor(u / quarter4);

  double a[40], c[40];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (n < 39) {
    const double an = 0.5 * (a[n] + b);
    const double cn1 = 0.5 * (a[n] - b);
    const double bn = std::sqrt(a[n] * b);
    ++n;
    a[n] = an;
    c[n] = cn1;
    b = bn;
    if (std::abs(cn1) <= 1e-17 * an) break;
  }
  // Backward phase recovery: sin(2 phi_{j-1} - phi_j) = (c_j/a_j) sin phi_j.
  double phi = std::ldexp(a[n] * u, n);
  for (int j = n; j >= 1; --j) {
    const double s = std::clamp(c[j] / a[j] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }
  JacobiTriple out{};
  out.sn = std::sin(phi);
  out.cn = std::cos(phi);
  out.dn = std::sqrt(1.0 - m * out.sn * out.sn);
  return out;
}

namespace {

double cubic_value(double c3, double c2, double c1, double c0, double x) {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

double cubic_derivative(double c3, double c2, double c1, double x) {
  return (3.0 * c3 * x + 2.0 * c2) * x + c1;
}

double newton_polish(double c3, double c2, double c1, double c0, double x) {
  for (int i = 0; i < 8; ++i) {
    const double f = cubic_value(c3, c2, c1, c0, x);
    const double fp = cubic_derivative(c3, c2, c1, x);
    if (fp == 0.0) break;
    const double step = f / fp;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace

CubicRoots solve_cubic_real(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0) throw std::invalid_argument("solve_cubic_real: leading coefficient is zero");

  // Monic, then depressed: x = y - a/3 gives y^3 + p y + q.
  const double a = c2 / c3;
  const double b = c1 / c3;
  const double cc = c0 / c3;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + cc;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  const double root_scale = std::max({1.0, std::abs(a), std::sqrt(std::abs(b)),
                                      std::cbrt(std::abs(cc))});
  const double double_root_tol = 1e-10 * root_scale;

  if (disc < 0.0) {
    // Three distinct real roots, trigonometric form.
    const double r = std::sqrt(-third_p);
    const double arg = std::clamp(3.0 * q / (2.0 * p * r), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    double roots[3];
    for (int j = 0; j < 3; ++j)
      roots[j] = 2.0 * r * std::cos(theta - 2.0 * kPi * j / 3.0) - a / 3.0;
    std::sort(roots, roots + 3);
    for (int j = 0; j < 3; ++j) roots[j] = newton_polish(c3, c2, c1, c0, roots[j]);
    std::sort(roots, roots + 3);
    if (roots[1] - roots[0] <= double_root_tol || roots[2] - roots[1] <= double_root_tol) {
      const double z = roots[1] - roots[0] <= double_root_tol ? 0.5 * (roots[0] + roots[1])
                                                              : 0.5 * (roots[1] + roots[2]);
      return DegenerateRoots{z};
    }
    return ThreeRealRoots{roots[0], roots[1], roots[2]};
  }

  const double sq = std::sqrt(disc);
  if (sq <= double_root_tol * std::max(1.0, std::abs(half_q))) {
    // disc ~ 0: at least a double root.
    const double u = std::cbrt(-half_q);
    return DegenerateRoots{(p == 0.0 && q == 0.0 ? 0.0 : -u) - a / 3.0};
  }

  // One real root, Cardano with the cancellation-free pairing.
  const double w = -half_q;
  const double u = std::cbrt(w + (w >= 0.0 ? sq : -sq));
  const double v = u == 0.0 ? 0.0 : -third_p / u;
  double z0 = newton_polish(c3, c2, c1, c0, u + v - a / 3.0);

  // Deflate: monic quadratic x^2 + P x + Q with P = a + z0, Q = b + P z0.
  const double quad_p = a + z0;
  const double quad_q = b + quad_p * z0;
  if (quad_p * quad_p - 4.0 * quad_q >= -double_root_tol * std::max(1.0, std::abs(quad_q)))
    return DegenerateRoots{z0};
  return OneRealRoot{z0, quad_p, quad_q};
}

std::vector<double> sextic_coefficients(const VelocityCoefficients& cf, double beta, int order) {
  if (order < 4 || order % 2 != 0)
    throw std::invalid_argument("sextic_coefficients: order must be even and >= 4");
  const double kA2 = cf.k * cf.k * cf.A * cf.A;
  const double dC = cf.k * (cf.C - cf.c);
  std::vector<double> coef(static_cast<std::size_t>(order) + 1, 0.0);
  coef[0] = -4.0 * beta * beta;
  coef[1] = 4.0 * dC * beta;
  coef[2] = kA2 + 2.0 * beta * cf.B - dC * dC;
  coef[3] = -cf.B * dC;
  coef[4] = kA2 / 3.0 - cf.B * cf.B / 4.0;
  // Remaining even terms come from (k^2 A^2 / 2) cosh(2Z):
  // coefficient of Z^{2n} is k^2 A^2 2^{2n-1} / (2n)!.
  double term = kA2 / 3.0;  // 2^3/4! at n = 2
  for (int n = 3; 2 * n <= order; ++n) {
    term *= 4.0 / ((2.0 * n) * (2.0 * n - 1.0));
    coef[static_cast<std::size_t>(2 * n)] = term;
  }
  return coef;
}

EllipticReduction reduce_case1a(const ThreeRealRoots& roots, double beta) {
  if (!(0.0 < roots.z1 && roots.z1 < roots.z2 && roots.z2 < roots.z3))
    throw std::domain_error("reduce_case1a: roots must satisfy 0 < z1 < z2 < z3");
  if (beta == 0.0) throw std::domain_error("reduce_case1a: beta must be nonzero");
  EllipticReduction red{};
  red.kind = EllipticCase::Case1a;
  red.modulus_sq = (roots.z3 - roots.z2) / (roots.z3 - roots.z1);
  red.scale = 2.0 * std::abs(beta) * std::sqrt(roots.z3 - roots.z1);
  red.roots = roots;
  red.validity_threshold = std::numeric_limits<double>::quiet_NaN();
  return red;
}

EllipticReduction reduce_case1b_or_case2(const CubicRoots& roots, double beta) {
  if (beta == 0.0) throw std::domain_error("reduce_case1b_or_case2: beta must be nonzero");
  EllipticReduction red{};
  red.roots = roots;
  if (const auto* three = std::get_if<ThreeRealRoots>(&roots)) {
    if (!(three->z1 < three->z2 && three->z2 < 0.0 && 0.0 < three->z3))
      throw std::domain_error("reduce_case1b_or_case2: expected z1 < z2 < 0 < z3");
    red.kind = EllipticCase::Case1b;
    red.modulus_sq = (three->z3 - three->z2) / (three->z3 - three->z1);
    red.scale = 2.0 * std::abs(beta) * std::sqrt(three->z3 - three->z1);
    red.validity_threshold = three->z3 / (three->z3 - three->z2);
    if (red.validity_threshold <= kEllipticWindowTol ||
        red.validity_threshold >= 1.0 - kEllipticWindowTol)
      red.kind = EllipticCase::HyperellipticOnly;
    return red;
  }
  if (const auto* one = std::get_if<OneRealRoot>(&roots)) {
    const double s2 = one->z0 * one->z0 + one->p * one->z0 + one->q;
    if (!(s2 > 0.0))
      throw std::domain_error("reduce_case1b_or_case2: residual quadratic not positive at z0");
    const double s = std::sqrt(s2);
    red.kind = EllipticCase::Case2;
    red.modulus_sq = 0.5 * (1.0 + (one->z0 + one->p / 2.0) / s);
    red.scale = 4.0 * std::abs(beta) * std::sqrt(s);
    red.validity_threshold = (s - one->z0) / (s + one->z0);
    return red;
  }
  throw std::domain_error("reduce_case1b_or_case2: degenerate root pattern");
}

}  // namespace vortexpaths
