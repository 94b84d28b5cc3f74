// Times the OpenMP kernels against their serial reference twins and checks
// that the outputs agree bit for bit while it is at it.
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vortexpaths/kernels.hpp"

using namespace vortexpaths;

namespace {

double wall() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

template <typename F>
double time_best_of(F&& f, int reps = 3) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = wall();
    f();
    best = std::min(best, wall() - t0);
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-24s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n", name,
              serial * 1e3, parallel * 1e3, serial / parallel,
              identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel variants run serially\n");
#endif

  WaveParameters params;
  params.g = 9.8;
  params.h0 = 1.0;
  params.k = 1.0;
  params.epsilon = 0.1;
  params.omega0 = 2.0;
  params.linearization = Linearization::ShearFlow;
  params.root_sign = RootSign::Plus;
  params = WaveParameters::with_C_equal_c(params);
  const auto cf = coefficients(params);

  {
    kernels::FieldGrid grid{0.0, 25.0, 1200, 0.0, 1.2, 600, 0.0};
    std::vector<kernels::FieldPoint> a, b;
    const double ts = time_best_of([&] { a = kernels::field_grid_serial(params, cf, grid); });
    const double tp = time_best_of([&] { b = kernels::field_grid(params, cf, grid); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i)
      same = a[i].u == b[i].u && a[i].v == b[i].v && a[i].p == b[i].p;
    report("field grid 1200x600", ts, tp, same);
  }

  {
    const double beta = 1.0;
    auto f = [&](double Z) {
      const double wave = cf.k * cf.A * std::sinh(Z);
      const double q = 2.0 * beta - 0.5 * cf.B * Z * Z;
      return wave * wave - q * q;
    };
    std::vector<double> a, b;
    const double ts = time_best_of([&] { a = kernels::scan_serial(f, 0.0, 3.0, 2'000'000); });
    const double tp = time_best_of([&] { b = kernels::scan(f, 0.0, 3.0, 2'000'000); });
    report("radicand scan 2e6", ts, tp, a == b);
  }

  {
    const Radicand F = Radicand::full(cf, 1.0);
    const ZOrbit orbit = make_orbit(F, 1.42, 3.1);
    ZQuadratureSolution sol(orbit, 1.42, +1);
    std::vector<double> times(400'000);
    for (std::size_t i = 0; i < times.size(); ++i) times[i] = 1e-4 * static_cast<double>(i);
    std::vector<ZSample> a, b;
    const double ts = time_best_of([&] { a = kernels::sample_orbit_serial(sol, times); });
    const double tp = time_best_of([&] { b = kernels::sample_orbit(sol, times); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].Z == b[i].Z;
    report("orbit sampling 4e5", ts, tp, same);
  }
  return 0;
}
