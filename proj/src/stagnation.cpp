#include "vortexpaths/stagnation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vortexpaths/trajectory.hpp"

namespace vortexpaths {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Residual {
  double beta;
  VelocityCoefficients cf;

  double q(double Z) const {
    return 2.0 * beta - cf.k * (cf.C - cf.c) * Z - 0.5 * cf.B * Z * Z;
  }
  double operator()(double Z) const {
    return std::abs(cf.k * cf.A * std::sinh(Z)) - std::abs(q(Z));
  }
  // One-sided derivative away from the kinks of the absolute values.
  double derivative(double Z) const {
    const double wave = cf.k * cf.A * std::sinh(Z);
    const double sgn_w = wave >= 0.0 ? 1.0 : -1.0;
    const double qq = q(Z);
    const double sgn_q = qq >= 0.0 ? 1.0 : -1.0;
    const double qp = -cf.k * (cf.C - cf.c) - cf.B * Z;
    return sgn_w * cf.k * cf.A * std::cosh(Z) - sgn_q * qp;
  }
};

double bisect(const Residual& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-14 * (1.0 + std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

StagnationRoot classify(const Residual& f, double Z) {
  const Radicand F = Radicand::full(f.cf, f.beta);
  StagnationRoot root{};
  root.Z = Z;
  root.residual = std::abs(f(Z));
  root.F_derivative = F.derivative(Z);
  const double scale = F.scale(Z) + std::abs(F.derivative(Z + 0.1)) + std::abs(F.derivative(std::max(Z - 0.1, 0.0)));
  root.kind = std::abs(root.F_derivative) <= 1e-6 * scale ? StagnationKind::Equilibrium
                                                          : StagnationKind::TurningPoint;
  return root;
}

}  // namespace

double stagnation_residual(double Z, double beta, const VelocityCoefficients& cf) {
  if (Z < 0.0) throw std::domain_error("stagnation_residual: Z must be >= 0");
  return Residual{beta, cf}(Z);
}

std::vector<StagnationRoot> find_z_stagnation(double beta, const VelocityCoefficients& cf,
                                              double Z_hi, int n_scan) {
  if (!(Z_hi > 0.0)) throw std::invalid_argument("find_z_stagnation: Z_hi must be > 0");
  if (n_scan < 256) throw std::invalid_argument("find_z_stagnation: n_scan must be >= 256");
  const Residual f{beta, cf};
  std::vector<double> zs;

  const double h = Z_hi / n_scan;
  if (std::abs(f(0.0)) <= 1e-12 * (1.0 + std::abs(2.0 * beta))) zs.push_back(0.0);
  double zp = 0.0;
  double fp = f(0.0);
  std::vector<double> vals(static_cast<std::size_t>(n_scan) + 1);
  vals[0] = fp;
  for (int i = 1; i <= n_scan; ++i) vals[static_cast<std::size_t>(i)] = f(i * h);
  for (int i = 1; i <= n_scan; ++i) {
    const double z = i * h;
    const double fv = vals[static_cast<std::size_t>(i)];
    if ((fp <= 0.0) != (fv <= 0.0)) {
      zs.push_back(bisect(f, zp, z));
    } else if (i >= 2) {
      // Interior minimum of |f|: candidate tangential root, polished by
      // Newton on f' (secant second derivative).
      const double fm = vals[static_cast<std::size_t>(i - 1)];
      const double f0 = vals[static_cast<std::size_t>(i - 2)];
      if (std::abs(fm) < std::abs(f0) && std::abs(fm) < std::abs(fv) && std::abs(fm) < 1e-4) {
        double zc = z - h;
        for (int it = 0; it < 80; ++it) {
          const double d1 = f.derivative(zc);
          const double d2 = (f.derivative(zc + 1e-7) - f.derivative(zc - 1e-7)) / 2e-7;
          if (d2 == 0.0) break;
          const double step = d1 / d2;
          zc -= step;
          if (std::abs(step) <= 1e-15 * (1.0 + std::abs(zc))) break;
        }
        if (zc > 0.0 && zc <= Z_hi && std::abs(f(zc)) <= 1e-10) zs.push_back(zc);
      }
    }
    zp = z;
    fp = fv;
  }

  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end(),
                       [](double a, double b) { return b - a <= 1e-8 * (1.0 + std::abs(b)); }),
           zs.end());

  std::vector<StagnationRoot> roots;
  roots.reserve(zs.size());
  for (double z : zs) roots.push_back(classify(f, z));
  return roots;
}

std::vector<FieldStagnationPoint> field_stagnation(const VelocityCoefficients& cf, double z_hi,
                                                   int n_scan) {
  if (!(z_hi > 0.0)) throw std::invalid_argument("field_stagnation: z_hi must be > 0");
  if (n_scan < 2) throw std::invalid_argument("field_stagnation: n_scan must be >= 2");
  std::vector<FieldStagnationPoint> out;
  const double h = z_hi / n_scan;
  for (double sigma : {1.0, -1.0}) {
    auto g = [&](double z) { return sigma * cf.A * std::cosh(cf.k * z) + cf.B * z + cf.C - cf.c; };
    double zp = h;  // bed excluded
    double gp = g(zp);
    for (int i = 2; i <= n_scan; ++i) {
      const double z = i * h;
      const double gv = g(z);
      if ((gp <= 0.0) != (gv <= 0.0)) {
        double lo = zp, hi = z, glo = gp;
        for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
          const double mid = 0.5 * (lo + hi);
          const double gm = g(mid);
          if ((glo <= 0.0) == (gm <= 0.0)) {
            lo = mid;
            glo = gm;
          } else {
            hi = mid;
          }
        }
        out.push_back({sigma > 0.0 ? 0.0 : kPi, 0.5 * (lo + hi)});
      }
      zp = z;
      gp = gv;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FieldStagnationPoint& a, const FieldStagnationPoint& b) {
              return a.z < b.z || (a.z == b.z && a.X < b.X);
            });
  return out;
}

}  // namespace vortexpaths
