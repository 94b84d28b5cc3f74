#include "vortexpaths/io/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vortexpaths/errors.hpp"

namespace vortexpaths::io {

using nlohmann::json;

namespace {

double require_number(const json& j, const char* field) {
  if (!j.contains(field))
    throw ValidationError(std::string("config: missing required field \"") + field + "\"");
  if (!j[field].is_number())
    throw ValidationError(std::string("config: field \"") + field + "\" must be a number");
  return j[field].get<double>();
}

double number_or(const json& j, const char* field, double fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_number())
    throw ValidationError(std::string("config: field \"") + field + "\" must be a number");
  return j[field].get<double>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config: top level must be a JSON object");

  RunConfig cfg;
  cfg.params.g = require_number(j, "g");
  cfg.params.h0 = require_number(j, "h0");
  cfg.params.k = require_number(j, "k");
  cfg.params.epsilon = require_number(j, "epsilon");
  cfg.params.omega0 = number_or(j, "omega0", 0.0);
  cfg.params.alpha = number_or(j, "alpha", 0.0);
  cfg.params.p0 = number_or(j, "p0", 101325.0);

  if (!j.contains("linearization"))
    throw ValidationError("config: missing required field \"linearization\"");
  const std::string lin = j["linearization"].get<std::string>();
  if (lin == "still")
    cfg.params.linearization = Linearization::StillWater;
  else if (lin == "shear")
    cfg.params.linearization = Linearization::ShearFlow;
  else
    throw ValidationError("config: field \"linearization\" must be \"still\" or \"shear\"");

  const std::string sign = j.value("root_sign", "+");
  if (sign == "+")
    cfg.params.root_sign = RootSign::Plus;
  else if (sign == "-")
    cfg.params.root_sign = RootSign::Minus;
  else
    throw ValidationError("config: field \"root_sign\" must be \"+\" or \"-\"");

  try {
    cfg.params.validate();
  } catch (const std::domain_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }

  if (j.contains("c_bg")) {
    cfg.params.c_bg = require_number(j, "c_bg");
  } else {
    cfg.params = WaveParameters::with_C_equal_c(cfg.params);
  }

  if (j.contains("beta")) cfg.beta = require_number(j, "beta");

  if (j.contains("initial")) {
    const json& init = j["initial"];
    if (!init.is_object()) throw ValidationError("config: field \"initial\" must be an object");
    InitialCondition ic;
    ic.x0 = require_number(init, "x0");
    ic.z0 = require_number(init, "z0");
    const std::string s = init.value("sign", "+");
    if (s == "+")
      ic.sign = +1;
    else if (s == "-")
      ic.sign = -1;
    else
      throw ValidationError("config: field \"initial.sign\" must be \"+\" or \"-\"");
    if (!(ic.z0 > 0.0)) throw ValidationError("config: initial.z0 must be > 0");
    cfg.initial = ic;
  }

  cfg.t_end = number_or(j, "t_end", 10.0);
  if (!(cfg.t_end > 0.0)) throw ValidationError("config: t_end must be > 0");
  cfg.n_samples = static_cast<int>(number_or(j, "n_samples", 1000));
  if (cfg.n_samples < 2) throw ValidationError("config: n_samples must be >= 2");

  const std::string method = j.value("method", "auto");
  if (method == "auto")
    cfg.method = RequestedMethod::Auto;
  else if (method == "ode")
    cfg.method = RequestedMethod::ReferenceODE;
  else if (method == "quadrature")
    cfg.method = RequestedMethod::Quadrature;
  else if (method == "elliptic")
    cfg.method = RequestedMethod::EllipticClosedForm;
  else if (method == "peakon")
    cfg.method = RequestedMethod::Peakon;
  else
    throw ValidationError(
        "config: field \"method\" must be auto|ode|quadrature|elliptic|peakon");

  cfg.output = j.value("output", std::string("out"));
  cfg.emit_svg = j.value("emit_svg", false);

  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_object()) throw ValidationError("config: field \"grid\" must be an object");
    if (g.contains("x0")) cfg.grid.x0 = require_number(g, "x0");
    if (g.contains("x1")) cfg.grid.x1 = require_number(g, "x1");
    if (g.contains("z0")) cfg.grid.z0 = require_number(g, "z0");
    if (g.contains("z1")) cfg.grid.z1 = require_number(g, "z1");
    cfg.grid.nx = static_cast<int>(number_or(g, "nx", 101));
    cfg.grid.nz = static_cast<int>(number_or(g, "nz", 51));
    cfg.grid.t = number_or(g, "t", 0.0);
    if (cfg.grid.nx < 1 || cfg.grid.nz < 1)
      throw ValidationError("config: grid.nx and grid.nz must be >= 1");
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace vortexpaths::io
