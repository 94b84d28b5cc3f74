#pragma once

#include <optional>
#include <string>

#include "vortexpaths/io/config.hpp"

namespace vortexpaths::io {

/// The four figure-preset parameter sets: k = 1, h0 = 1, g = 9.8, epsilon = 0.1,
/// alpha = 0, beta = 1, shear-flow linearization, C = c, with
///   fig3:  omega0 =   2, plus branch   (c > 0, A > 0)
///   fig4:  omega0 =  20, minus branch  (c > 0, A < 0)
///   fig5:  omega0 =   2, minus branch  (c < 0, A < 0)
///   neg20: omega0 = -20, plus branch   (c < 0, A > 0, single real cubic root)
enum class Preset { Fig3, Fig4, Fig5, Neg20 };

/// Six-digit reference values the reproduction run is compared against.
struct PresetReference {
  double c, A, B;
  std::optional<double> z_hat0;     ///< single positive cubic root (neg20)
  std::optional<double> quad_p;     ///< residual quadratic p (neg20)
  std::optional<double> quad_q;     ///< residual quadratic q (neg20)
  std::optional<double> threshold;  ///< elliptic validity threshold (neg20)
  const char* classification;
};

RunConfig preset_config(Preset preset);
PresetReference preset_reference(Preset preset);
std::optional<Preset> preset_from_name(const std::string& name);
const char* preset_name(Preset preset);

}  // namespace vortexpaths::io
