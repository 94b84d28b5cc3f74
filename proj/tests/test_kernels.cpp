#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vortexpaths/kernels.hpp"

using namespace vortexpaths;

namespace {

WaveParameters fig3_params() {
  WaveParameters p;
  p.g = 9.8;
  p.h0 = 1.0;
  p.k = 1.0;
  p.epsilon = 0.1;
  p.omega0 = 2.0;
  p.linearization = Linearization::ShearFlow;
  p.root_sign = RootSign::Plus;
  return WaveParameters::with_C_equal_c(p);
}

}  // namespace

TEST_CASE("parallel field grid reproduces the serial reference bit for bit") {
  const auto p = fig3_params();
  const auto cf = coefficients(p);
  kernels::FieldGrid grid{-2.0, 8.0, 97, 0.0, 1.2, 53, 0.4};
  const auto serial = kernels::field_grid_serial(p, cf, grid);
  const auto parallel = kernels::field_grid(p, cf, grid);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].x == parallel[i].x);
    CHECK(serial[i].z == parallel[i].z);
    CHECK(serial[i].u == parallel[i].u);
    CHECK(serial[i].v == parallel[i].v);
    CHECK(serial[i].p == parallel[i].p);
    CHECK(serial[i].eta == parallel[i].eta);
    CHECK(serial[i].in_column == parallel[i].in_column);
  }
}

TEST_CASE("field grid values match the point evaluators") {
  const auto p = fig3_params();
  const auto cf = coefficients(p);
  kernels::FieldGrid grid{0.0, 3.0, 7, 0.0, 1.0, 5, 0.7};
  const auto pts = kernels::field_grid(p, cf, grid);
  REQUIRE(pts.size() == 35);
  for (const auto& fp : pts) {
    const auto [u, v] = velocity_field(cf, fp.x, fp.z, grid.t);
    CHECK(fp.u == u);
    CHECK(fp.v == v);
    CHECK(fp.p == pressure_field(p, cf, fp.x, fp.z, grid.t));
  }
  CHECK_THROWS_AS(kernels::field_grid(p, cf, kernels::FieldGrid{0, 1, 0, 0, 1, 2, 0}),
                  std::invalid_argument);
}

TEST_CASE("parallel scan equals the serial scan") {
  auto f = [](double z) { return std::sinh(z) - z * z; };
  const auto a = kernels::scan_serial(f, 0.0, 5.0, 4096);
  const auto b = kernels::scan(f, 0.0, 5.0, 4096);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("parallel orbit sampling equals the serial sampling") {
  const auto p = fig3_params();
  const auto cf = coefficients(p);
  const Radicand F = Radicand::full(cf, 1.0);
  const ZOrbit orbit = make_orbit(F, 1.42, 3.1);
  ZQuadratureSolution sol(orbit, 1.42, +1);
  std::vector<double> times;
  for (int i = 0; i < 2000; ++i) times.push_back(0.005 * i);
  const auto a = kernels::sample_orbit_serial(sol, times);
  const auto b = kernels::sample_orbit(sol, times);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].Z == b[i].Z);
    CHECK(a[i].dZdt == b[i].dZdt);
  }
}
