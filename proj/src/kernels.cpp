#include "vortexpaths/kernels.hpp"

#include <stdexcept>

namespace vortexpaths::kernels {

namespace {

FieldPoint eval_point(const WaveParameters& params, const VelocityCoefficients& cf,
                      const FieldGrid& grid, int ix, int iz) {
  const double x = grid.nx > 1 ? grid.x0 + (grid.x1 - grid.x0) * ix / (grid.nx - 1) : grid.x0;
  const double z = grid.nz > 1 ? grid.z0 + (grid.z1 - grid.z0) * iz / (grid.nz - 1) : grid.z0;
  const FieldSample s = field_sample(params, cf, x, z, grid.t);
  return {x, z, s.eta, s.p, s.u, s.v, in_column(params, cf.c, x, z, grid.t)};
}

void check_grid(const FieldGrid& grid) {
  if (grid.nx < 1 || grid.nz < 1) throw std::invalid_argument("field grid: nx, nz must be >= 1");
}

}  // namespace

std::vector<FieldPoint> field_grid_serial(const WaveParameters& params,
                                          const VelocityCoefficients& cf, const FieldGrid& grid) {
  check_grid(grid);
  std::vector<FieldPoint> out(static_cast<std::size_t>(grid.nx) * grid.nz);
  for (int iz = 0; iz < grid.nz; ++iz)
    for (int ix = 0; ix < grid.nx; ++ix)
      out[static_cast<std::size_t>(iz) * grid.nx + ix] = eval_point(params, cf, grid, ix, iz);
  return out;
}

std::vector<FieldPoint> field_grid(const WaveParameters& params, const VelocityCoefficients& cf,
                                   const FieldGrid& grid) {
  check_grid(grid);
  std::vector<FieldPoint> out(static_cast<std::size_t>(grid.nx) * grid.nz);
  const std::int64_t total = static_cast<std::int64_t>(grid.nx) * grid.nz;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    const int iz = static_cast<int>(i / grid.nx);
    const int ix = static_cast<int>(i % grid.nx);
    out[static_cast<std::size_t>(i)] = eval_point(params, cf, grid, ix, iz);
  }
  return out;
}

std::vector<double> scan_serial(const std::function<double(double)>& f, double lo, double hi,
                                int n) {
  if (n < 1) throw std::invalid_argument("scan: n must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  const double h = (hi - lo) / n;
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = f(lo + i * h);
  return out;
}

std::vector<double> scan(const std::function<double(double)>& f, double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("scan: n must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  const double h = (hi - lo) / n;
#pragma omp parallel for schedule(static)
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = f(lo + i * h);
  return out;
}

std::vector<ZSample> sample_orbit_serial(const ZQuadratureSolution& sol,
                                         std::span<const double> times) {
  std::vector<ZSample> out(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) out[i] = sol.at(times[i]);
  return out;
}

std::vector<ZSample> sample_orbit(const ZQuadratureSolution& sol, std::span<const double> times) {
  std::vector<ZSample> out(times.size());
  const std::int64_t n = static_cast<std::int64_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = sol.at(times[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace vortexpaths::kernels
