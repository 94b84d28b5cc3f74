#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vortexpaths/errors.hpp"
#include "vortexpaths/io/config.hpp"
#include "vortexpaths/io/log.hpp"
#include "vortexpaths/io/presets.hpp"
#include "vortexpaths/io/run.hpp"

namespace {

int dispatch(const std::string& subcommand, const std::string& config_path,
             const std::string& preset_name, const std::string& out_prefix, bool svg) {
  using namespace vortexpaths;
  try {
    std::optional<io::Preset> preset;
    if (!preset_name.empty()) {
      preset = io::preset_from_name(preset_name);
      if (!preset) throw ValidationError("unknown preset: " + preset_name);
    }

    io::RunConfig cfg;
    if (!config_path.empty()) {
      cfg = io::parse_config_file(config_path);
    } else if (preset) {
      cfg = io::preset_config(*preset);
    } else {
      throw ValidationError("missing --config (or --preset for reproduce)");
    }
    if (!out_prefix.empty()) cfg.output = out_prefix;
    if (svg) cfg.emit_svg = true;

    io::run(cfg, subcommand, preset, std::cout);
    return io::kOk;
  } catch (const ValidationError& e) {
    io::log_error(e.what());
    return io::kValidation;
  } catch (const std::domain_error& e) {
    io::log_error(e.what());
    return io::kValidation;
  } catch (const std::invalid_argument& e) {
    io::log_error(e.what());
    return io::kValidation;
  } catch (const IoError& e) {
    io::log_error(e.what());
    return io::kIo;
  } catch (const NumericsError& e) {
    io::log_error(e.what());
    return io::kNumerical;
  } catch (const std::exception& e) {
    io::log_error(e.what());
    return io::kNumerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"particle paths beneath small-amplitude waves on constant-vorticity flows"};
  app.require_subcommand(1);

  std::string config_path;
  std::string preset;
  std::string out_prefix;
  bool svg = false;

  for (const char* name : {"speed", "field", "trajectory", "stagnation", "reproduce"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON configuration file");
    sub->add_option("--out", out_prefix, "output path prefix");
    sub->add_flag("--svg", svg, "also emit an SVG polyline of the path");
    if (std::string(name) == "reproduce")
      sub->add_option("--preset", preset, "fig3|fig4|fig5|neg20");
  }

  CLI11_PARSE(app, argc, argv);
  return dispatch(app.get_subcommands().front()->get_name(), config_path, preset, out_prefix,
                  svg);
}
