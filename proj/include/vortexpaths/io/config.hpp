#pragma once

#include <optional>
#include <string>

#include "vortexpaths/wave_model.hpp"

namespace vortexpaths::io {

struct InitialCondition {
  double x0 = 0.0;
  double z0 = 0.5;
  int sign = +1;  ///< initial sign of dz/dt
};

enum class RequestedMethod { Auto, ReferenceODE, Quadrature, EllipticClosedForm, Peakon };

struct GridSpec {
  std::optional<double> x0, x1;  ///< default: one wavelength from 0
  int nx = 101;
  std::optional<double> z0, z1;  ///< default: the water column [0, h0]
  int nz = 51;
  double t = 0.0;
};

struct RunConfig {
  WaveParameters params;
  std::optional<double> beta;  ///< orbit constant; derived from `initial` when absent
  std::optional<InitialCondition> initial;
  double t_end = 10.0;
  int n_samples = 1000;
  RequestedMethod method = RequestedMethod::Auto;
  std::string output = "out";
  bool emit_svg = false;
  GridSpec grid;
};

/// Parses and validates a UTF-8 JSON document. Schema errors name the
/// offending field; validation errors quote the violated invariant. When
/// c_bg is absent it is chosen so the uniform drift C equals the wave speed
/// (the elliptic path needs C = c).
RunConfig parse_config(const std::string& json_text);

RunConfig parse_config_file(const std::string& path);

}  // namespace vortexpaths::io
