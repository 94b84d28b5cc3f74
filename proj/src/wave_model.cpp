#include "vortexpaths/wave_model.hpp"

#include <cmath>
#include <stdexcept>

namespace vortexpaths {

void WaveParameters::validate() const {
  if (!(g > 0.0)) throw std::domain_error("wave parameters: g must be > 0");
  if (!(h0 > 0.0)) throw std::domain_error("wave parameters: h0 must be > 0");
  if (!(k > 0.0)) throw std::domain_error("wave parameters: k must be > 0");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::domain_error("wave parameters: epsilon must lie in (0,1), small-amplitude regime");
}

WaveParameters WaveParameters::with_C_equal_c(WaveParameters base) {
  base.validate();
  const double c = wave_speed(base);
  const double root_gh = std::sqrt(base.g * base.h0);
  // C = eps*sqrt(g h0)*c_bg (still water) or alpha*sqrt(g h0) + eps*sqrt(g h0)*c_bg (shear).
  if (base.linearization == Linearization::StillWater) {
    base.c_bg = c / (base.epsilon * root_gh);
  } else {
    base.c_bg = (c - base.alpha * root_gh) / (base.epsilon * root_gh);
  }
  return base;
}

double wave_speed_still(const WaveParameters& params) {
  params.validate();
  const double c = std::sqrt(params.g * std::tanh(params.k * params.h0) / params.k);
  return params.root_sign == RootSign::Plus ? c : -c;
}

double wave_speed_shear(const WaveParameters& params) {
  params.validate();
  const double th = std::tanh(params.k * params.h0);
  const double rad = std::sqrt(params.omega0 * params.omega0 * th * th + 4.0 * params.g * params.k * th);
  const double branch = params.root_sign == RootSign::Plus ? rad : -rad;
  return params.h0 * params.omega0 + params.alpha * std::sqrt(params.g * params.h0) +
         (-params.omega0 * th + branch) / (2.0 * params.k);
}

double wave_speed(const WaveParameters& params) {
  return params.linearization == Linearization::StillWater ? wave_speed_still(params)
                                                           : wave_speed_shear(params);
}

VelocityCoefficients coefficients(const WaveParameters& params) {
  params.validate();
  const double root_gh = std::sqrt(params.g * params.h0);
  VelocityCoefficients cf{};
  cf.k = params.k;
  if (params.linearization == Linearization::StillWater) {
    cf.c = wave_speed_still(params);
    cf.A = params.epsilon * params.k * params.h0 * cf.c / std::sinh(params.k * params.h0);
    cf.B = params.epsilon * params.omega0;
    cf.C = params.epsilon * root_gh * params.c_bg;
  } else {
    cf.c = wave_speed_shear(params);
    const double relative = cf.c - params.h0 * params.omega0 - root_gh * params.alpha;
    cf.A = params.epsilon * params.k * params.h0 * relative / std::sinh(params.k * params.h0);
    cf.B = params.omega0;
    cf.C = params.alpha * root_gh + params.epsilon * root_gh * params.c_bg;
  }
  return cf;
}

std::pair<double, double> velocity_field(const VelocityCoefficients& cf, double x, double z,
                                         double t) {
  const double phase = cf.k * (x - cf.c * t);
  const double u = cf.A * std::cosh(cf.k * z) * std::cos(phase) + cf.B * z + cf.C;
  const double v = cf.A * std::sinh(cf.k * z) * std::sin(phase);
  return {u, v};
}

double surface_elevation(const WaveParameters& params, double c, double x, double t) {
  return params.epsilon * params.h0 * std::cos(params.k * (x - c * t));
}

double pressure_field(const WaveParameters& params, const VelocityCoefficients& cf, double x,
                      double z, double t) {
  const double phase_cos = std::cos(params.k * (x - cf.c * t));
  const double hydrostatic = params.p0 + params.g * (params.h0 - z);
  if (params.linearization == Linearization::StillWater) {
    return hydrostatic + params.epsilon * params.g * params.h0 * std::cosh(params.k * z) *
                             phase_cos / std::cosh(params.k * params.h0);
  }
  const double root_gh = std::sqrt(params.g * params.h0);
  const double relative = cf.c - params.h0 * params.omega0 - root_gh * params.alpha;
  const double bracket =
      params.k * params.h0 * (cf.c - params.omega0 * z - root_gh * params.alpha) *
          std::cosh(params.k * z) +
      params.h0 * params.omega0 * std::sinh(params.k * z);
  return hydrostatic + params.epsilon * relative / std::sinh(params.k * params.h0) * bracket *
                           phase_cos;
}

FieldSample field_sample(const WaveParameters& params, const VelocityCoefficients& cf, double x,
                         double z, double t) {
  FieldSample s{};
  s.eta = surface_elevation(params, cf.c, x, t);
  s.p = pressure_field(params, cf, x, z, t);
  auto [u, v] = velocity_field(cf, x, z, t);
  s.u = u;
  s.v = v;
  return s;
}

bool in_column(const WaveParameters& params, double c, double x, double z, double t) {
  return z >= 0.0 && z <= params.h0 + surface_elevation(params, c, x, t);
}

}  // namespace vortexpaths
