#include "vortexpaths/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vortexpaths/errors.hpp"
#include "vortexpaths/ode.hpp"
#include "vortexpaths/quadrature.hpp"

namespace vortexpaths {

namespace {

constexpr double kPi = 3.14159265358979323846;

double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

double poly_eval_derivative(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) v = v * x + static_cast<double>(i) * c[i];
  return v;
}

}  // namespace

Radicand Radicand::full(const VelocityCoefficients& cf, double beta) {
  return Radicand(cf, beta, {});
}

Radicand Radicand::truncated(const VelocityCoefficients& cf, double beta, int order) {
  return Radicand(cf, beta, sextic_coefficients(cf, beta, order));
}

double Radicand::operator()(double Z) const {
  if (!poly_.empty()) return poly_eval(poly_, Z);
  const double wave = coeffs_.k * coeffs_.A * std::sinh(Z);
  const double Q = 2.0 * beta_ - coeffs_.k * (coeffs_.C - coeffs_.c) * Z - 0.5 * coeffs_.B * Z * Z;
  return wave * wave - Q * Q;
}

double Radicand::derivative(double Z) const {
  if (!poly_.empty()) return poly_eval_derivative(poly_, Z);
  const double kA = coeffs_.k * coeffs_.A;
  const double Q = 2.0 * beta_ - coeffs_.k * (coeffs_.C - coeffs_.c) * Z - 0.5 * coeffs_.B * Z * Z;
  const double Qp = -coeffs_.k * (coeffs_.C - coeffs_.c) - coeffs_.B * Z;
  return 2.0 * kA * kA * std::sinh(Z) * std::cosh(Z) - 2.0 * Q * Qp;
}

double Radicand::scale(double Z) const {
  if (!poly_.empty()) {
    double s = 1.0;
    double zp = 1.0;
    for (double c : poly_) {
      s += std::abs(c * zp);
      zp *= std::abs(Z);
    }
    return s;
  }
  const double wave = coeffs_.k * coeffs_.A * std::sinh(Z);
  const double Q = 2.0 * beta_ - coeffs_.k * (coeffs_.C - coeffs_.c) * Z - 0.5 * coeffs_.B * Z * Z;
  return wave * wave + Q * Q + 1.0;
}

std::pair<double, double> ode_rhs(const VelocityCoefficients& cf, const TrajectoryState& s) {
  return velocity_field(cf, s.x, s.z, s.t);
}

MovingFrameState to_moving_frame(const VelocityCoefficients& cf, const TrajectoryState& s) {
  return {cf.k * (s.x - cf.c * s.t), cf.k * s.z};
}

double beta_from_initial(const VelocityCoefficients& cf, double X0, double Z0) {
  return 0.5 * (cf.k * cf.A * std::cos(X0) * std::sinh(Z0) + cf.k * (cf.C - cf.c) * Z0 +
                0.5 * cf.B * Z0 * Z0);
}

double z_rate_squared(double Z, const ZOrbit& orbit) { return orbit.radicand(Z); }

namespace {

double bisect_root(const Radicand& F, double lo, double hi) {
  double flo = F(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-13 * (1.0 + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = F(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  // One Newton polish from the midpoint; keep it only if it stays bracketed.
  const double mid = 0.5 * (lo + hi);
  const double d = F.derivative(mid);
  if (d != 0.0) {
    const double polished = mid - F(mid) / d;
    if (polished >= lo && polished <= hi) return polished;
  }
  return mid;
}

}  // namespace

std::vector<double> radicand_roots(const Radicand& F, double z_lo, double z_hi, int n_scan) {
  if (n_scan < 2) throw std::invalid_argument("radicand_roots: n_scan must be >= 2");
  if (!(z_hi > z_lo)) throw std::invalid_argument("radicand_roots: empty scan range");
  std::vector<double> roots;
  const double h = (z_hi - z_lo) / n_scan;
  double zp = z_lo;
  double fp = F(zp);
  for (int i = 1; i <= n_scan; ++i) {
    const double z = z_lo + i * h;
    const double f = F(z);
    if ((fp <= 0.0) != (f <= 0.0)) {
      roots.push_back(bisect_root(F, zp, z));
    } else if (i >= 2) {
      // Tangential roots: a local extremum of F that touches zero without
      // crossing. Polish the critical point of F with Newton on F'.
      const double fpp = F(z - 2.0 * h);
      if (std::abs(fp) < std::abs(fpp) && std::abs(fp) < std::abs(f)) {
        double zc = z - h;
        for (int it = 0; it < 60; ++it) {
          const double d1 = F.derivative(zc);
          const double d2 = (F.derivative(zc + 1e-7) - F.derivative(zc - 1e-7)) / 2e-7;
          if (d2 == 0.0) break;
          const double step = d1 / d2;
          zc -= step;
          if (std::abs(step) <= 1e-14 * (1.0 + std::abs(zc))) break;
        }
        if (zc > zp && zc < z && std::abs(F(zc)) <= 1e-8 * F.scale(zc)) roots.push_back(zc);
      }
    }
    zp = z;
    fp = f;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return b - a <= 1e-9 * (1.0 + std::abs(b)); }),
              roots.end());
  return roots;
}

std::pair<double, double> turning_points(const Radicand& F, double Z_init, double Z_hi,
                                         int n_scan) {
  if (!(Z_init > 0.0)) throw std::invalid_argument("turning_points: Z_init must be > 0");
  if (!(Z_hi > Z_init)) throw std::invalid_argument("turning_points: Z_hi must exceed Z_init");
  const double f0 = F(Z_init);
  if (f0 < -1e-12 * F.scale(Z_init))
    throw NoOrbitError("turning_points: radicand negative at the initial Z, no real motion");

  const double h = Z_hi / n_scan;

  // Walk down until F turns negative; F(0) = -4 beta^2 <= 0 closes the
  // bracket at the bed when the grid itself never goes negative.
  double z_min = 0.0;
  {
    double hi = Z_init, lo = Z_init;
    bool found = false;
    for (double z = Z_init - h; z > 0.0; z -= h) {
      if (F(z) <= 0.0) {
        lo = z;
        found = true;
        break;
      }
      hi = z;
    }
    if (!found && F(0.0) <= 0.0 && f0 > 0.0) {
      lo = 0.0;
      found = true;
    }
    if (!found) throw NoOrbitError("turning_points: no lower turning point above the bed");
    z_min = (F(lo) == 0.0 && lo == 0.0) ? 0.0 : bisect_root(F, lo, hi);
  }
  if (z_min <= 0.0)
    throw NoOrbitError("turning_points: lower turning point collapsed onto the bed");

  double z_max = 0.0;
  {
    double lo = Z_init;
    bool found = false;
    for (double z = Z_init + h; z <= Z_hi + 0.5 * h; z += h) {
      if (F(z) <= 0.0) {
        z_max = bisect_root(F, lo, std::min(z, Z_hi));
        found = true;
        break;
      }
      lo = z;
    }
    if (!found)
      throw NoOrbitError("turning_points: no upper turning point within the scan range");
  }
  if (!(z_min < z_max))
    throw NoOrbitError("turning_points: turning points degenerate (equilibrium)");
  return {z_min, z_max};
}

double period_of_radicand(const std::function<double(double)>& F, double z_min, double z_max) {
  if (!(z_min < z_max)) throw std::invalid_argument("period_of_radicand: need z_min < z_max");
  const double d = z_max - z_min;
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double Z = z_min * c * c + z_max * s * s;
    // (Z - z_min)(z_max - Z) = d^2 s^2 c^2 exactly under this substitution.
    const double G = F(Z) / (d * d * s * s * c * c);
    return 1.0 / std::sqrt(G);
  };
  // The integrand is analytic, so a 64-point panel converges well before
  // its nodes crowd the endpoints, where evaluating F near its roots loses
  // digits. Refining past the noise floor makes things worse, so keep the
  // estimate from the refinement step with the smallest change.
  double prev = gl_integrate(integrand, 0.0, kPi / 2.0, 64);
  double best = prev;
  double best_change = std::numeric_limits<double>::infinity();
  for (int panels = 2; panels <= 128; panels *= 2) {
    const double cur = gl_integrate_composite(integrand, 0.0, kPi / 2.0, panels, 64);
    const double change = std::abs(cur - prev);
    if (change < best_change) {
      best_change = change;
      best = cur;
    }
    if (change <= 1e-13 * std::abs(cur)) return 4.0 * cur;
    if (change > 4.0 * best_change) break;  // refining into round-off
    prev = cur;
  }
  return 4.0 * best;
}

ZOrbit make_orbit(const Radicand& F, double Z_init, double Z_hi, int n_scan) {
  auto [z_min, z_max] = turning_points(F, Z_init, Z_hi, n_scan);
  ZOrbit orbit{F, F.beta(), z_min, z_max, 0.0, F.coeffs()};
  orbit.period = period_of_radicand([&F](double Z) { return F(Z); }, z_min, z_max);
  return orbit;
}

double z_period(const ZOrbit& orbit) { return orbit.period; }

double drift_per_period(const VelocityCoefficients& cf, const ZOrbit& orbit) {
  return cf.c * orbit.period;
}

ZQuadratureSolution::ZQuadratureSolution(const ZOrbit& orbit, double Z0, int sign0, int knots)
    : orbit_(orbit), knots_(knots) {
  if (knots_ < 16) throw std::invalid_argument("ZQuadratureSolution: too few knots");
  const double zmin = orbit_.z_min;
  const double zmax = orbit_.z_max;
  const double d = zmax - zmin;
  const double tol = 1e-9 * (1.0 + d);
  if (Z0 < zmin - tol || Z0 > zmax + tol)
    throw std::invalid_argument("ZQuadratureSolution: Z0 outside the orbit interval");
  Z0 = std::clamp(Z0, zmin, zmax);

  dtheta_ = (kPi / 2.0) / knots_;
  tau_.assign(static_cast<std::size_t>(knots_) + 1, 0.0);
  dtau_.assign(static_cast<std::size_t>(knots_) + 1, 0.0);

  const double dFmin = orbit_.radicand.derivative(zmin);
  const double dFmax = orbit_.radicand.derivative(zmax);
  if (!(dFmin > 0.0) || !(dFmax < 0.0))
    throw NoOrbitError("ZQuadratureSolution: turning point is not a simple root");

  auto G_of_theta = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    if (theta == 0.0) return dFmin / d;
    if (theta == kPi / 2.0) return -dFmax / d;
    const double Z = zmin * c * c + zmax * s * s;
    return orbit_.radicand(Z) / (d * d * s * s * c * c);
  };
  auto integrand = [&](double theta) { return 2.0 / std::sqrt(G_of_theta(theta)); };

  for (int i = 0; i <= knots_; ++i)
    dtau_[static_cast<std::size_t>(i)] = integrand(std::min(i * dtheta_, kPi / 2.0));
  for (int i = 0; i < knots_; ++i) {
    const double a = i * dtheta_;
    const double panel = gl_integrate(integrand, a, a + dtheta_, 8);
    tau_[static_cast<std::size_t>(i) + 1] = tau_[static_cast<std::size_t>(i)] + panel;
  }
  half_period_ = tau_.back();

  const double ratio = std::clamp((Z0 - zmin) / d, 0.0, 1.0);
  const double theta0 = std::asin(std::sqrt(ratio));
  const double tau0 = tau_of_theta(theta0);
  s0_ = sign0 >= 0 ? tau0 : 2.0 * half_period_ - tau0;
}

double ZQuadratureSolution::z_of_theta(double theta) const {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return orbit_.z_min * c * c + orbit_.z_max * s * s;
}

double ZQuadratureSolution::tau_of_theta(double theta) const {
  theta = std::clamp(theta, 0.0, kPi / 2.0);
  int i = std::min(static_cast<int>(theta / dtheta_), knots_ - 1);
  const double u = (theta - i * dtheta_) / dtheta_;
  const auto idx = static_cast<std::size_t>(i);
  const double y0 = tau_[idx], y1 = tau_[idx + 1];
  const double m0 = dtau_[idx] * dtheta_, m1 = dtau_[idx + 1] * dtheta_;
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * m0 + (-2 * u3 + 3 * u2) * y1 +
         (u3 - u2) * m1;
}

double ZQuadratureSolution::theta_of_tau(double tau) const {
  tau = std::clamp(tau, 0.0, half_period_);
  const auto it = std::upper_bound(tau_.begin(), tau_.end(), tau);
  int i = std::clamp(static_cast<int>(it - tau_.begin()) - 1, 0, knots_ - 1);
  double lo = i * dtheta_, hi = (i + 1) * dtheta_;
  double theta = 0.5 * (lo + hi);
  for (int iter = 0; iter < 60; ++iter) {
    const double f = tau_of_theta(theta) - tau;
    if (f > 0.0)
      hi = theta;
    else
      lo = theta;
    // Newton with the analytic d tau/d theta, bisection fallback.
    const auto idx = static_cast<std::size_t>(std::min(static_cast<int>(theta / dtheta_), knots_ - 1));
    const double u = (theta - static_cast<double>(idx) * dtheta_) / dtheta_;
    const double slope = dtau_[idx] * (1.0 - u) + dtau_[idx + 1] * u;  // close enough for Newton
    double next = slope > 0.0 ? theta - f / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - theta) <= 1e-15 * (1.0 + std::abs(theta))) {
      theta = next;
      break;
    }
    theta = next;
  }
  return theta;
}

ZSample ZQuadratureSolution::at(double t) const {
  const double two_h = 2.0 * half_period_;
  double s = s0_ + t;
  s -= two_h * std::floor(s / two_h);
  double tau;
  double sign;
  if (s <= half_period_) {
    tau = s;
    sign = 1.0;
  } else {
    tau = two_h - s;
    sign = -1.0;
  }
  const double theta = theta_of_tau(tau);
  const double Z = z_of_theta(theta);
  const double F = std::max(orbit_.radicand(Z), 0.0);
  return {t, Z, sign * std::sqrt(F)};
}

std::vector<ZSample> invert_z_quadrature(const ZOrbit& orbit, double Z0, int sign0,
                                         std::span<const double> times) {
  ZQuadratureSolution sol(orbit, Z0, sign0);
  std::vector<ZSample> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(sol.at(t));
  return out;
}

ZSample closed_form_z_elliptic(double t, const EllipticReduction& red) {
  switch (red.kind) {
    case EllipticCase::Case1a: {
      const auto& r = std::get<ThreeRealRoots>(red.roots);
      const JacobiTriple j = jacobi_sn_cn_dn(red.scale * t, red.modulus_sq);
      const double denom = r.z2 * j.sn * j.sn + r.z3 * j.cn * j.cn;
      const double Z = 1.0 / std::sqrt(denom);
      const double dZdt =
          red.scale * (r.z3 - r.z2) * j.sn * j.cn * j.dn / (denom * std::sqrt(denom));
      return {t, Z, dZdt};
    }
    case EllipticCase::Case2: {
      const auto& r = std::get<OneRealRoot>(red.roots);
      const JacobiTriple j = jacobi_sn_cn_dn(red.scale * t, red.modulus_sq);
      if (j.cn <= red.validity_threshold)
        throw OutOfValidityWindow("closed_form_z_elliptic: cn fell to the window threshold", j.cn,
                                  red.validity_threshold);
      const double s = std::sqrt(r.z0 * r.z0 + r.p * r.z0 + r.q);
      const double zhat = r.z0 - s * (1.0 - j.cn) / (1.0 + j.cn);
      if (!(zhat > 0.0))
        throw OutOfValidityWindow("closed_form_z_elliptic: Zhat left the positive range", j.cn,
                                  red.validity_threshold);
      const double Z = 1.0 / std::sqrt(zhat);
      const double dzhat = -s * 2.0 * j.sn * j.dn * red.scale / ((1.0 + j.cn) * (1.0 + j.cn));
      const double dZdt = -0.5 * dzhat / (zhat * std::sqrt(zhat));
      return {t, Z, dZdt};
    }
    case EllipticCase::Case1b:
      throw std::domain_error(
          "closed_form_z_elliptic: no closed form for Case 1b, use the quadrature inversion");
    case EllipticCase::HyperellipticOnly:
      throw std::domain_error("closed_form_z_elliptic: reduction is not elliptic");
  }
  throw std::domain_error("closed_form_z_elliptic: unknown case");
}

double elliptic_z_period(const EllipticReduction& red) {
  if (red.kind != EllipticCase::Case1a)
    throw std::domain_error("elliptic_z_period: only Case1a orbits are periodic in closed form");
  return 2.0 * elliptic_K(red.modulus_sq) / red.scale;
}

PeakonState peakon_state(const VelocityCoefficients& cf, double const1, double const2, double t,
                         bool force) {
  const double s = cf.k * cf.A * t + const2;
  if (s == 0.0) throw AsymptoteError("peakon_state: evaluation at the vertical asymptote");
  const double w = std::exp(-std::abs(s));
  const double z = 2.0 / cf.k * std::atanh(w);

  const double c_scale = std::abs(cf.c) + std::abs(cf.C) + 1.0;
  if (!force && (std::abs(cf.B) > 1e-12 || std::abs(cf.C - cf.c) > 1e-12 * c_scale)) {
    // Residual of the first equation along the curve: dx/dt misses u by
    // B z + (C - c) when the exactness conditions fail.
    throw PeakonValidityError(
        "peakon_state: the peakon is an exact solution only for B = 0 and C = c",
        std::abs(cf.B * z + (cf.C - cf.c)));
  }

  PeakonState out{};
  out.state.t = t;
  out.state.x = cf.c * t + const1;
  out.state.z = z;
  const double sgn = s > 0.0 ? 1.0 : -1.0;
  out.dzdt = -2.0 * cf.A * sgn * w / (1.0 - w * w);
  out.X = -sgn * kPi / 2.0;
  return out;
}

XReconstruction reconstruct_x(const VelocityCoefficients& cf, std::span<const ZSample> samples,
                              std::optional<double> beta) {
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("reconstruct_x: need at least two samples");
  const double kA = cf.k * cf.A;

  if (beta) {
    // Quadrant from the motion integral: sin X and cos X share the positive
    // scale k A sinh Z (or its truncated counterpart), so
    // X = atan2(sgn(kA) dZ/dt, sgn(kA) Q(Z)) up to the 2 pi winding.
    const double sgn = kA >= 0.0 ? 1.0 : -1.0;
    XReconstruction out;
    out.X.resize(n);
    out.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(samples[i].Z > 0.0))
        throw std::invalid_argument("reconstruct_x: samples must have Z > 0");
      const double Z = samples[i].Z;
      const double q = 2.0 * *beta - cf.k * (cf.C - cf.c) * Z - 0.5 * cf.B * Z * Z;
      const double wave = kA * std::sinh(Z);
      // Sanity: the two components must recompose the wave envelope.
      const double envelope_sq = samples[i].dZdt * samples[i].dZdt + q * q;
      if (envelope_sq > wave * wave * 1.2 + 1e-12)
        throw BranchAmbiguityError(
            "reconstruct_x: samples are inconsistent with the given orbit constant");
      const double a = std::atan2(sgn * samples[i].dZdt, sgn * q);
      out.X[i] = i == 0 ? a : a + 2.0 * kPi * std::round((out.X[i - 1] - a) / (2.0 * kPi));
      out.x[i] = cf.c * samples[i].t + out.X[i] / cf.k;
    }
    return out;
  }

  std::vector<double> principal(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(samples[i].Z > 0.0))
      throw std::invalid_argument("reconstruct_x: samples must have Z > 0");
    double arg = samples[i].dZdt / (kA * std::sinh(samples[i].Z));
    if (std::abs(arg) > 1.0 + 1e-12)
      throw BranchAmbiguityError("reconstruct_x: |dZ/dt| exceeds |k A sinh Z| beyond tolerance");
    principal[i] = std::asin(std::clamp(arg, -1.0, 1.0));
  }

  // Candidate selection uses a linear prediction of the next phase, not
  // bare continuity: at sin X = +-1 the two arcsin families touch and a
  // circulating phase must pass straight through the fold instead of
  // bouncing back.
  auto build = [&](bool mirror_start) {
    std::vector<double> X(n);
    X[0] = mirror_start ? kPi - principal[0] : principal[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double predicted = i >= 2 ? 2.0 * X[i - 1] - X[i - 2] : X[0];
      const double a = principal[i];
      const double b = kPi - principal[i];
      const double ca = a + 2.0 * kPi * std::round((predicted - a) / (2.0 * kPi));
      const double cb = b + 2.0 * kPi * std::round((predicted - b) / (2.0 * kPi));
      X[i] = std::abs(ca - predicted) <= std::abs(cb - predicted) ? ca : cb;
    }
    return X;
  };

  // Consistency with dX/dt = k A cosh Z cos X + B Z + k(C-c): a wrong
  // quadrant flips the cos term, which central differences expose.
  auto misfit = [&](const std::vector<double>& X) {
    double bad = 0.0;
    int counted = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double dt = samples[i + 1].t - samples[i - 1].t;
      if (dt <= 0.0) continue;
      const double fd = (X[i + 1] - X[i - 1]) / dt;
      const double model = kA * std::cosh(samples[i].Z) * std::cos(X[i]) + cf.B * samples[i].Z +
                           cf.k * (cf.C - cf.c);
      const double wave = std::abs(kA) * std::cosh(samples[i].Z);
      if (std::abs(fd - model) > std::max(0.5 * wave, 1e-6)) bad += 1.0;
      ++counted;
    }
    return counted > 0 ? bad / counted : 0.0;
  };

  std::vector<double> X = build(false);
  if (misfit(X) > 0.1) {
    std::vector<double> alt = build(true);
    if (misfit(alt) > 0.1)
      throw BranchAmbiguityError(
          "reconstruct_x: neither arcsin branch satisfies the moving-frame equation");
    X = std::move(alt);
  }

  XReconstruction out;
  out.X = std::move(X);
  out.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.x[i] = cf.c * samples[i].t + out.X[i] / cf.k;
  return out;
}

EllipticReduction elliptic_reduction_for(const VelocityCoefficients& cf, double beta) {
  const double c_scale = std::abs(cf.c) + std::abs(cf.C) + 1.0;
  if (std::abs(cf.C - cf.c) > 1e-12 * c_scale)
    throw std::domain_error("elliptic_reduction_for: the cubic pathway requires C = c");
  if (beta == 0.0) throw std::domain_error("elliptic_reduction_for: beta must be nonzero");
  const auto sx = sextic_coefficients(cf, beta, 6);
  const CubicRoots roots = solve_cubic_real(sx[0], sx[2], sx[4], sx[6]);
  if (std::holds_alternative<DegenerateRoots>(roots))
    throw NumericsError("elliptic_reduction_for: cubic has a repeated root");
  if (const auto* three = std::get_if<ThreeRealRoots>(&roots)) {
    if (three->z1 > 0.0) return reduce_case1a(*three, beta);
    return reduce_case1b_or_case2(roots, beta);
  }
  return reduce_case1b_or_case2(roots, beta);
}

TrajectoryCase classify_case(const VelocityCoefficients& cf, double beta, int order) {
  const double c_scale = std::abs(cf.c) + std::abs(cf.C) + 1.0;
  if (std::abs(cf.C - cf.c) > 1e-12 * c_scale) return TrajectoryCase::HyperellipticOnly;
  if (order != 6) return TrajectoryCase::HyperellipticOnly;
  if (beta == 0.0 || cf.A == 0.0) return TrajectoryCase::Degenerate;

  const auto sx = sextic_coefficients(cf, beta, 6);
  const CubicRoots roots = solve_cubic_real(sx[0], sx[2], sx[4], sx[6]);
  if (std::holds_alternative<DegenerateRoots>(roots)) return TrajectoryCase::Degenerate;
  if (const auto* three = std::get_if<ThreeRealRoots>(&roots)) {
    if (three->z1 > 0.0) return TrajectoryCase::Case1a;
    const EllipticReduction red = reduce_case1b_or_case2(roots, beta);
    return red.kind == EllipticCase::HyperellipticOnly ? TrajectoryCase::HyperellipticOnly
                                                       : TrajectoryCase::Case1b;
  }
  const EllipticReduction red = reduce_case1b_or_case2(roots, beta);
  if (red.validity_threshold >= 1.0 - kEllipticWindowTol) return TrajectoryCase::HyperellipticOnly;
  return TrajectoryCase::Case2;
}

Trajectory integrate_reference(const VelocityCoefficients& cf, const TrajectoryState& init,
                               std::span<const double> times, double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-6))
    throw std::domain_error("integrate_reference: tol must lie in [1e-12, 1e-6]");
  Rhs2 rhs = [&cf](double t, const std::array<double, 2>& y) -> std::array<double, 2> {
    auto [u, v] = velocity_field(cf, y[0], y[1], t);
    return {u, v};
  };
  OdeOptions opt;
  opt.rel_tol = tol;
  opt.abs_tol = tol * 1e-2;
  std::vector<double> ts(times.begin(), times.end());
  const auto raw = integrate_dopri5(rhs, init.t, {init.x, init.z}, ts, opt);
  Trajectory traj;
  traj.method = SolutionMethod::ReferenceODE;
  traj.samples.reserve(raw.size());
  for (const auto& s : raw) traj.samples.push_back({s.t, s.y[0], s.y[1]});
  return traj;
}

Trajectory integrate_reference(const VelocityCoefficients& cf, const TrajectoryState& init,
                               double t_end, double tol, int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("integrate_reference: n_samples must be >= 2");
  std::vector<double> times(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i)
    times[static_cast<std::size_t>(i)] = init.t + (t_end - init.t) * i / (n_samples - 1);
  return integrate_reference(cf, init, times, tol);
}

double default_scan_limit(const WaveParameters& params) {
  return params.k * params.h0 * (1.0 + params.epsilon) + 2.0;
}

}  // namespace vortexpaths
