#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vortexpaths/stagnation.hpp"
#include "vortexpaths/trajectory.hpp"

using namespace vortexpaths;

namespace {

constexpr double kPi = 3.14159265358979323846;

/// C = c coefficients with prescribed A, B (k = 1).
VelocityCoefficients cc(double A, double B, double C_minus_c = 0.0) {
  return {A, B, 1.3 + C_minus_c, 1.3, 1.0};
}

/// Parameters with a genuine equilibrium (double radicand root) at Z* = 0.8.
struct CenterSetup {
  VelocityCoefficients cf;
  double beta;
  double Zs;
};

CenterSetup center_setup() {
  const double k = 1.0, A = 0.3, Zs = 0.8;
  const double B = -k * A * std::cosh(Zs) / Zs;
  const double beta = 0.5 * (k * A * std::sinh(Zs) + 0.5 * B * Zs * Zs);
  return {{A, B, 1.1, 1.1, k}, beta, Zs};
}

}  // namespace

TEST_CASE("stagnation residual basics") {
  const auto cf = cc(0.7, 1.1);
  CHECK(stagnation_residual(0.0, 0.0, cf) == 0.0);
  CHECK_THROWS_AS(stagnation_residual(-0.1, 0.0, cf), std::domain_error);
  // B = 0, C = c: the unique root solves sinh Z = 2|beta|/(k|A|).
  const auto cf1 = cc(1.0, 0.0);
  const double root = oracles::bisect(
      [&](double Z) { return stagnation_residual(Z, 0.5, cf1); }, 0.5, 1.5);
  CHECK(root == doctest::Approx(std::asinh(1.0)).epsilon(1e-12));
}

TEST_CASE("find_z_stagnation: bed root for beta = 0") {
  const auto roots = find_z_stagnation(0.0, cc(1.0, 0.0), 3.0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].Z == 0.0);
  CHECK(roots[0].kind == StagnationKind::Equilibrium);
}

TEST_CASE("find_z_stagnation: single root matches the analytic inversion") {
  const auto roots = find_z_stagnation(0.5, cc(1.0, 0.0), 3.0);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0].Z - 0.8813735870195430) <= 1e-9);
  CHECK(roots[0].kind == StagnationKind::TurningPoint);
  CHECK(roots[0].residual <= 1e-10);
}

TEST_CASE("every reported root kills both the residual and the radicand") {
  const struct {
    VelocityCoefficients cf;
    double beta;
    double Z_hi;
  } cases[] = {
      {cc(1.0, 0.0), 0.5, 3.0},
      {cc(0.05, 2.0), 0.5, 4.0},
      {cc(0.05, 2.0), 0.5, 10.0},
      {cc(0.1, -2.0, 4.0), 1.5, 4.2},
      {cc(0.5, 2.0), -0.5, 6.0},
  };
  for (const auto& c : cases) {
    const auto roots = find_z_stagnation(c.beta, c.cf, c.Z_hi);
    const Radicand F = Radicand::full(c.cf, c.beta);
    for (const auto& r : roots) {
      CHECK(std::abs(stagnation_residual(r.Z, c.beta, c.cf)) <= 1e-10);
      CHECK(std::abs(F(r.Z)) <= 1e-9 * F.scale(r.Z));
    }
  }
}

TEST_CASE("root counts over the sign-pattern sweep") {
  // Five sign patterns of (B, beta, C-c) with windows like the plotted
  // graphical study; expected counts pinned, all within {1,2,3,4,6}.
  const struct {
    VelocityCoefficients cf;
    double beta;
    double Z_hi;
    std::size_t count;
  } cases[] = {
      {cc(1.0, 0.0), 0.5, 3.0, 1},         // B = 0: monotone sinh vs constant
      {cc(0.05, 2.0), 0.5, 4.0, 2},        // parabola dip pokes through
      {cc(0.05, 2.0), 0.5, 10.0, 3},       // widen the window: far crossing
      {cc(0.1, -2.0, 4.0), 1.5, 4.2, 4},   // two-lobed |Q|, C != c
      {cc(0.5, 2.0), -0.5, 6.0, 1},        // beta < 0: no dip at all
  };
  for (const auto& c : cases) {
    const auto roots = find_z_stagnation(c.beta, c.cf, c.Z_hi);
    CHECK(roots.size() == c.count);
    const bool allowed = roots.size() == 1 || roots.size() == 2 || roots.size() == 3 ||
                         roots.size() == 4 || roots.size() == 6;
    CHECK(allowed);
    // Count stability under scan refinement.
    CHECK(find_z_stagnation(c.beta, c.cf, c.Z_hi, 8192).size() == c.count);
  }
}

TEST_CASE("tangential root is found and classified as equilibrium") {
  const auto [cf, beta, Zs] = center_setup();
  const auto roots = find_z_stagnation(beta, cf, 3.0);
  bool found = false;
  for (const auto& r : roots) {
    if (std::abs(r.Z - Zs) < 1e-6) {
      found = true;
      CHECK(r.kind == StagnationKind::Equilibrium);
      CHECK(std::abs(r.F_derivative) <= 1e-8);
    }
  }
  CHECK(found);
}

TEST_CASE("equilibrium roots are fixed points of the particle motion") {
  const auto [cf, beta, Zs] = center_setup();
  // cos X* = -B Z* / (k A cosh Z*) = +1 here, so X* = 0.
  const TrajectoryState init{0.0, 0.0, Zs / cf.k};
  std::vector<double> times;
  for (int i = 0; i <= 100; ++i) times.push_back(0.1 * i);
  const auto traj = integrate_reference(cf, init, times, 1e-11);
  for (const auto& s : traj.samples) {
    CHECK(std::abs(cf.k * s.z - Zs) <= 1e-6);
    // The particle drifts at the wave speed: u = c at a stagnation point.
    CHECK(s.x == doctest::Approx(cf.c * s.t).epsilon(1e-7));
  }
}

TEST_CASE("turning-point roots are not fixed points") {
  const auto cf = cc(1.0, 0.0);
  const double beta = 0.5;
  const auto roots = find_z_stagnation(beta, cf, 3.0);
  REQUIRE(roots.size() == 1);
  REQUIRE(roots[0].kind == StagnationKind::TurningPoint);
  // Start on the turning point with the phase that makes dZ/dt = 0
  // instantaneously (sin X = 0, cos X matching the residual sign).
  const double Zs = roots[0].Z;
  const double q = 2.0 * beta - 0.5 * cf.B * Zs * Zs;
  const double X0 = q / (cf.k * cf.A * std::sinh(Zs)) > 0.0 ? 0.0 : kPi;
  std::vector<double> times{0.0, 0.5, 1.0};
  const auto traj = integrate_reference(cf, {0.0, X0 / cf.k, Zs / cf.k}, times, 1e-11);
  CHECK(std::abs(traj.samples.back().z - Zs / cf.k) > 1e-3);
}

TEST_CASE("field stagnation against the scalar bisection oracle") {
  const auto cf = cc(0.5, 2.0);
  // cos X = -1 branch: 2z - 0.5 cosh z = 0.
  const double oracle = oracles::bisect([](double z) { return 2.0 * z - 0.5 * std::cosh(z); },
                                        0.1, 1.0);
  const auto pts = field_stagnation(cf, 1.0);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].X == doctest::Approx(kPi));
  CHECK(pts[0].z == doctest::Approx(oracle).epsilon(1e-10));

  // The wider window also catches the second crossing of the same branch.
  const double oracle2 = oracles::bisect([](double z) { return 2.0 * z - 0.5 * std::cosh(z); },
                                         2.0, 4.0);
  const auto pts2 = field_stagnation(cf, 4.0);
  REQUIRE(pts2.size() == 2);
  CHECK(pts2[1].z == doctest::Approx(oracle2).epsilon(1e-10));
}

TEST_CASE("cos X = +1 branch with nonnegative terms has no root") {
  // A > 0, B >= 0, C >= c: the branch function is a sum of positives.
  const auto cf = cc(0.5, 2.0, 0.3);
  for (const auto& p : field_stagnation(cf, 5.0)) CHECK(p.X != 0.0);
}

TEST_CASE("equilibrium Z-roots coincide with field stagnation points") {
  const auto [cf, beta, Zs] = center_setup();
  const auto zroots = find_z_stagnation(beta, cf, 3.0);
  const auto fpts = field_stagnation(cf, 3.0 / cf.k);
  for (const auto& r : zroots) {
    if (r.kind != StagnationKind::Equilibrium || r.Z == 0.0) continue;
    bool matched = false;
    for (const auto& p : fpts)
      if (std::abs(p.z - r.Z / cf.k) <= 1e-8) matched = true;
    CHECK(matched);
  }
}

TEST_CASE("scan parameter validation") {
  const auto cf = cc(1.0, 0.0);
  CHECK_THROWS_AS(find_z_stagnation(0.5, cf, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(find_z_stagnation(0.5, cf, 3.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(field_stagnation(cf, 0.0), std::invalid_argument);
}
