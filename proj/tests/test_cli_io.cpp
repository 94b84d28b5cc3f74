#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vortexpaths/errors.hpp"
#include "vortexpaths/io/config.hpp"
#include "vortexpaths/io/csv.hpp"
#include "vortexpaths/io/presets.hpp"
#include "vortexpaths/io/run.hpp"
#include "vortexpaths/io/svg.hpp"

using namespace vortexpaths;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("vortexpaths_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string prefix(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("parse_config accepts the figure-3 style document") {
  const auto cfg = io::parse_config(R"({
    "g": 9.8, "h0": 1, "k": 1, "epsilon": 0.1, "omega0": 2,
    "linearization": "shear", "root_sign": "+", "beta": 1,
    "t_end": 10, "n_samples": 1000
  })");
  CHECK(cfg.params.omega0 == 2.0);
  CHECK(cfg.params.root_sign == RootSign::Plus);
  CHECK(cfg.beta.has_value());
  CHECK(*cfg.beta == 1.0);
  CHECK(cfg.n_samples == 1000);
  // Defaults: p0, alpha, and c_bg chosen so C = c.
  CHECK(cfg.params.p0 == 101325.0);
  CHECK(cfg.params.alpha == 0.0);
  const auto cf = coefficients(cfg.params);
  CHECK(cf.C == doctest::Approx(cf.c).epsilon(1e-14));
  // It reproduces the figure-3 reference coefficients.
  CHECK(cf.c == doctest::Approx(4.07454).epsilon(1e-5));
  CHECK(cf.A == doctest::Approx(0.176526).epsilon(1e-4));
}

TEST_CASE("parse_config schema errors name the field") {
  try {
    io::parse_config(R"({"h0": 1, "k": 1, "epsilon": 0.1, "linearization": "shear"})");
    FAIL("missing g must throw");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("\"g\"") != std::string::npos);
  }
  CHECK_THROWS_AS(io::parse_config("{not json"), ValidationError);
  CHECK_THROWS_AS(io::parse_config(R"({"g": 9.8, "h0": 1, "k": 1, "epsilon": 1.5,
                                      "linearization": "shear"})"),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_config(R"({"g": 9.8, "h0": 1, "k": 1, "epsilon": 0.1,
                                      "linearization": "shear", "t_end": -1})"),
                  ValidationError);
  CHECK_THROWS_AS(io::parse_config(R"({"g": 9.8, "h0": 1, "k": 1, "epsilon": 0.1,
                                      "linearization": "shear", "n_samples": 1})"),
                  ValidationError);
}

TEST_CASE("csv rendering") {
  CHECK(io::render_csv({"a", "b", "c"}, {}) == "a,b,c\n");
  CHECK(io::render_csv({"a", "b", "c"}, {{"0", "0", "0"}}) == "a,b,c\n0,0,0\n");
  CHECK_THROWS_AS(io::render_csv({"a", "b"}, {{"1"}}), std::invalid_argument);
  // Quoting only when needed.
  CHECK(io::render_csv({"x"}, {{"a,b"}}) == "x\n\"a,b\"\n");
}

TEST_CASE("csv numbers round-trip at double precision") {
  for (double v : {0.0, 1.0 / 3.0, -2.7319631638012e3, 1e-17, 4.07454}) {
    const std::string s = io::csv_number(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("svg emission") {
  const auto one_segment = io::render_svg({{0.0, 0.0}, {1.0, 2.0}});
  CHECK(one_segment.find("<polyline") != std::string::npos);
  CHECK(one_segment.find("viewBox") != std::string::npos);
  // y flips so greater z is up: the second point renders with y = -2.
  CHECK(one_segment.find("1,-2") != std::string::npos);
  CHECK_THROWS_AS(io::render_svg({{1.0, 1.0}}), ValidationError);
  CHECK_THROWS_AS(io::render_svg({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}}), ValidationError);
}

TEST_CASE("vanishing wave amplitude degenerates the trajectory to a straight drift line") {
  // The dispersion keeps A != 0 for any valid parameters, so drive A toward
  // zero with a tiny amplitude; the path must collapse onto x = x0 + C t,
  // z = z0 up to O(A).
  TempDir tmp;
  auto cfg = io::parse_config(R"({
    "g": 9.8, "h0": 1, "k": 1, "epsilon": 1e-9, "omega0": 0,
    "linearization": "shear", "method": "ode",
    "initial": {"x0": 0, "z0": 0.5},
    "t_end": 2, "n_samples": 21
  })");
  cfg.output = tmp.prefix("a0");
  cfg.emit_svg = true;
  std::ostringstream out;
  io::run(cfg, "trajectory", std::nullopt, out);
  const auto cf = coefficients(cfg.params);
  CHECK(std::abs(cf.A) < 1e-8);
  const std::string csv = slurp(cfg.output + "_trajectory.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,x,z,u,v,X,Z,method");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string t_cell, x_cell, z_cell;
    std::getline(cells, t_cell, ',');
    std::getline(cells, x_cell, ',');
    std::getline(cells, z_cell, ',');
    CHECK(std::abs(std::stod(z_cell) - 0.5) <= 1e-8);
    CHECK(std::abs(std::stod(x_cell) - cf.C * std::stod(t_cell)) <= 1e-7);
  }
  CHECK(rows == 21);
  CHECK(fs::exists(cfg.output + "_trajectory.svg"));
}

TEST_CASE("trajectory output re-parses to the values that were written") {
  TempDir tmp;
  auto cfg = io::preset_config(io::Preset::Fig3);
  cfg.output = tmp.prefix("roundtrip");
  cfg.n_samples = 50;
  cfg.t_end = 2.0;
  std::ostringstream out;
  io::run(cfg, "trajectory", std::nullopt, out);
  const Trajectory traj = io::solve_trajectory(cfg);
  const std::string csv = slurp(cfg.output + "_trajectory.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  std::size_t i = 0;
  while (std::getline(lines, line) && i < traj.samples.size()) {
    std::istringstream cells(line);
    std::string t_cell, x_cell, z_cell;
    std::getline(cells, t_cell, ',');
    std::getline(cells, x_cell, ',');
    std::getline(cells, z_cell, ',');
    CHECK(std::stod(t_cell) == traj.samples[i].t);
    CHECK(std::stod(x_cell) == traj.samples[i].x);
    CHECK(std::stod(z_cell) == traj.samples[i].z);
    ++i;
  }
  CHECK(i == traj.samples.size());
}

TEST_CASE("auto method picks the closed form only when the case allows it") {
  auto fig3 = io::preset_config(io::Preset::Fig3);
  fig3.n_samples = 64;
  fig3.t_end = 3.0;
  CHECK(io::solve_trajectory(fig3).method == SolutionMethod::EllipticClosedForm);

  // The single-real-root set is HyperellipticOnly: auto must not return the
  // closed form. (No bounded orbit exists either, so it lands on the ODE.)
  auto neg = io::preset_config(io::Preset::Neg20);
  neg.n_samples = 32;
  neg.t_end = 0.5;
  neg.initial = io::InitialCondition{0.0, 0.5, +1};
  const auto traj = io::solve_trajectory(neg);
  CHECK(traj.method != SolutionMethod::EllipticClosedForm);
}

TEST_CASE("reproduce fig3 summary carries the reference values") {
  TempDir tmp;
  auto cfg = io::preset_config(io::Preset::Fig3);
  cfg.output = tmp.prefix("fig3");
  std::ostringstream out;
  io::run(cfg, "reproduce", io::Preset::Fig3, out);
  const std::string summary = slurp(cfg.output + "_summary.csv");
  CHECK(summary.find("c,") != std::string::npos);
  CHECK(summary.find("4.0745") != std::string::npos);
  CHECK(summary.find("0.17652") != std::string::npos);
  CHECK(summary.find("classification,Case1a,Case1a,0") != std::string::npos);
  CHECK(fs::exists(cfg.output + "_trajectory.csv"));
  CHECK(fs::exists(cfg.output + "_trajectory.svg"));
}

TEST_CASE("reproduce neg20 summary reports the cubic data and the verdict") {
  TempDir tmp;
  auto cfg = io::preset_config(io::Preset::Neg20);
  cfg.output = tmp.prefix("neg20");
  std::ostringstream out;
  io::run(cfg, "reproduce", io::Preset::Neg20, out);
  const std::string summary = slurp(cfg.output + "_summary.csv");
  CHECK(summary.find("z_hat0") != std::string::npos);
  CHECK(summary.find("9.5542") != std::string::npos);
  CHECK(summary.find("24.858") != std::string::npos);
  CHECK(summary.find("0.9996") != std::string::npos);
  CHECK(summary.find("classification,HyperellipticOnly,HyperellipticOnly,0") !=
        std::string::npos);
}

TEST_CASE("reproduce runs are byte-identical") {
  TempDir tmp;
  std::ostringstream out1, out2;
  auto cfg1 = io::preset_config(io::Preset::Fig3);
  cfg1.output = tmp.prefix("run1");
  io::run(cfg1, "reproduce", io::Preset::Fig3, out1);
  auto cfg2 = io::preset_config(io::Preset::Fig3);
  cfg2.output = tmp.prefix("run2");
  io::run(cfg2, "reproduce", io::Preset::Fig3, out2);
  CHECK(slurp(cfg1.output + "_summary.csv") == slurp(cfg2.output + "_summary.csv"));
  CHECK(slurp(cfg1.output + "_trajectory.csv") == slurp(cfg2.output + "_trajectory.csv"));
  CHECK(slurp(cfg1.output + "_trajectory.svg") == slurp(cfg2.output + "_trajectory.svg"));
  CHECK(out1.str() == out2.str());
}

TEST_CASE("speed and stagnation subcommands") {
  TempDir tmp;
  auto cfg = io::preset_config(io::Preset::Fig3);
  cfg.output = tmp.prefix("s");
  std::ostringstream out;
  io::run(cfg, "speed", std::nullopt, out);
  CHECK(out.str().find("c = 4.07453849") != std::string::npos);
  io::run(cfg, "stagnation", std::nullopt, out);
  CHECK(fs::exists(cfg.output + "_stagnation.csv"));
  io::run(cfg, "field", std::nullopt, out);
  CHECK(fs::exists(cfg.output + "_field.csv"));
  CHECK_THROWS_AS(io::run(cfg, "nonsense", std::nullopt, out), ValidationError);
  CHECK_THROWS_AS(io::run(cfg, "reproduce", std::nullopt, out), ValidationError);
}
