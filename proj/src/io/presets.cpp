#include "vortexpaths/io/presets.hpp"

namespace vortexpaths::io {

RunConfig preset_config(Preset preset) {
  RunConfig cfg;
  cfg.params.g = 9.8;
  cfg.params.h0 = 1.0;
  cfg.params.k = 1.0;
  cfg.params.epsilon = 0.1;
  cfg.params.alpha = 0.0;
  cfg.params.linearization = Linearization::ShearFlow;
  switch (preset) {
    case Preset::Fig3:
      cfg.params.omega0 = 2.0;
      cfg.params.root_sign = RootSign::Plus;
      break;
    case Preset::Fig4:
      cfg.params.omega0 = 20.0;
      cfg.params.root_sign = RootSign::Minus;
      break;
    case Preset::Fig5:
      cfg.params.omega0 = 2.0;
      cfg.params.root_sign = RootSign::Minus;
      break;
    case Preset::Neg20:
      cfg.params.omega0 = -20.0;
      cfg.params.root_sign = RootSign::Plus;
      break;
  }
  cfg.params = WaveParameters::with_C_equal_c(cfg.params);
  cfg.beta = 1.0;
  cfg.t_end = 10.0;
  cfg.n_samples = 2001;
  cfg.method = RequestedMethod::Auto;
  cfg.emit_svg = true;
  return cfg;
}

PresetReference preset_reference(Preset preset) {
  switch (preset) {
    case Preset::Fig3:
      return {4.07454, 0.176526, 2.0, {}, {}, {}, {}, "Case1a"};
    case Preset::Fig4:
      return {4.29294, -1.33654, 20.0, {}, {}, {}, {}, "Case1a"};
    case Preset::Fig5:
      return {-1.59773, -0.306137, 2.0, {}, {}, {}, {}, "Case1a"};
    case Preset::Neg20:
      return {-4.29294, 1.33654, -20.0, 0.000798, 9.55422, 24.8588, 0.99968, "HyperellipticOnly"};
  }
  return {};
}

std::optional<Preset> preset_from_name(const std::string& name) {
  if (name == "fig3") return Preset::Fig3;
  if (name == "fig4") return Preset::Fig4;
  if (name == "fig5") return Preset::Fig5;
  if (name == "neg20") return Preset::Neg20;
  return std::nullopt;
}

const char* preset_name(Preset preset) {
  switch (preset) {
    case Preset::Fig3:
      return "fig3";
    case Preset::Fig4:
      return "fig4";
    case Preset::Fig5:
      return "fig5";
    case Preset::Neg20:
      return "neg20";
  }
  return "?";
}

}  // namespace vortexpaths::io
