#pragma once

#include <span>
#include <vector>

#include "vortexpaths/trajectory.hpp"
#include "vortexpaths/wave_model.hpp"

namespace vortexpaths::kernels {

// Data-parallel evaluation kernels. Every kernel has a serial reference
// twin (the _serial variant) that computes each element with the identical
// expressions; the OpenMP versions partition elements only, perform no
// reductions, and therefore reproduce the serial results bit for bit.
// tests/test_kernels.cpp checks that, benchmarks/bench_kernels.cpp times it.

struct FieldGrid {
  double x0 = 0.0, x1 = 1.0;
  int nx = 2;
  double z0 = 0.0, z1 = 1.0;
  int nz = 2;
  double t = 0.0;
};

struct FieldPoint {
  double x, z;
  double eta, p, u, v;
  bool in_column;
};

std::vector<FieldPoint> field_grid_serial(const WaveParameters& params,
                                          const VelocityCoefficients& cf, const FieldGrid& grid);
std::vector<FieldPoint> field_grid(const WaveParameters& params, const VelocityCoefficients& cf,
                                   const FieldGrid& grid);

/// Tabulates f on the n+1 uniform nodes of [lo, hi].
std::vector<double> scan_serial(const std::function<double(double)>& f, double lo, double hi,
                                int n);
std::vector<double> scan(const std::function<double(double)>& f, double lo, double hi, int n);

/// Evaluates a built quadrature solution at many times.
std::vector<ZSample> sample_orbit_serial(const ZQuadratureSolution& sol,
                                         std::span<const double> times);
std::vector<ZSample> sample_orbit(const ZQuadratureSolution& sol, std::span<const double> times);

}  // namespace vortexpaths::kernels
