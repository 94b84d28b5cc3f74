#include "vortexpaths/ode.hpp"

#include <algorithm>
#include <cmath>

#include "vortexpaths/errors.hpp"

namespace vortexpaths {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,     0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct StepResult {
  std::array<double, 2> y;
  double error;  // scaled error norm
};

StepResult try_step(const Rhs2& rhs, double t, const std::array<double, 2>& y, double h,
                    const std::array<double, 2>& k0, std::array<double, 2>& k_last,
                    const OdeOptions& opt) {
  std::array<std::array<double, 2>, 7> k;
  k[0] = k0;
  for (int s = 1; s < 7; ++s) {
    std::array<double, 2> ys = y;
    for (int j = 0; j < s; ++j) {
      ys[0] += h * kA[s][j] * k[j][0];
      ys[1] += h * kA[s][j] * k[j][1];
    }
    k[s] = rhs(t + kC[s] * h, ys);
  }
  std::array<double, 2> y5 = y, y4 = y;
  for (int s = 0; s < 7; ++s) {
    y5[0] += h * kB5[s] * k[s][0];
    y5[1] += h * kB5[s] * k[s][1];
    y4[0] += h * kB4[s] * k[s][0];
    y4[1] += h * kB4[s] * k[s][1];
  }
  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double scale = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
    const double e = (y5[i] - y4[i]) / scale;
    err += e * e;
  }
  k_last = k[6];  // FSAL
  return {y5, std::sqrt(err / 2.0)};
}

}  // namespace

std::vector<OdeSample> integrate_dopri5(const Rhs2& rhs, double t0,
                                        const std::array<double, 2>& y0,
                                        const std::vector<double>& sample_times,
                                        const OdeOptions& options) {
  std::vector<OdeSample> out;
  out.reserve(sample_times.size());

  double t = t0;
  std::array<double, 2> y = y0;
  std::array<double, 2> k0 = rhs(t, y);
  double h = options.initial_step;
  long steps = 0;

  for (double target : sample_times) {
    if (target < t) continue;  // sample times must be ascending from t0
    if (target == t) {
      out.push_back({t, y});
      continue;
    }
    while (t < target) {
      const bool clipped = t + h >= target;
      double h_try = clipped ? target - t : h;
      std::array<double, 2> k_last{};
      StepResult r = try_step(rhs, t, y, h_try, k0, k_last, options);
      if (r.error <= 1.0) {
        t = clipped ? target : t + h_try;
        y = r.y;
        k0 = k_last;
      }
      // PI-free classical controller: h *= clamp(0.9 err^{-1/5}, 0.2, 5).
      double factor = r.error > 0.0 ? 0.9 * std::pow(r.error, -0.2) : 5.0;
      factor = std::clamp(factor, 0.2, 5.0);
      double h_new = (clipped && r.error <= 1.0 ? h : h_try) * factor;
      if (options.max_step > 0.0) h_new = std::min(h_new, options.max_step);
      h = h_new;
      if (h < 1e-14 * (1.0 + std::abs(t)))
        throw StepSizeUnderflow("ode step size underflow", t);
      if (++steps > options.max_steps)
        throw NumericsError("ode exceeded the maximum step count");
    }
    out.push_back({t, y});
  }
  return out;
}

}  // namespace vortexpaths
