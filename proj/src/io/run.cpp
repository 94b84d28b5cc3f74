#include "vortexpaths/io/run.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "vortexpaths/errors.hpp"
#include "vortexpaths/io/csv.hpp"
#include "vortexpaths/io/log.hpp"
#include "vortexpaths/io/svg.hpp"
#include "vortexpaths/kernels.hpp"
#include "vortexpaths/stagnation.hpp"

namespace vortexpaths::io {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> sample_times(const RunConfig& cfg) {
  std::vector<double> times(static_cast<std::size_t>(cfg.n_samples));
  for (int i = 0; i < cfg.n_samples; ++i)
    times[static_cast<std::size_t>(i)] = cfg.t_end * i / (cfg.n_samples - 1);
  return times;
}

double resolve_beta(const RunConfig& cfg, const VelocityCoefficients& coeffs) {
  if (cfg.beta) return *cfg.beta;
  if (cfg.initial) {
    const double X0 = coeffs.k * cfg.initial->x0;
    const double Z0 = coeffs.k * cfg.initial->z0;
    return beta_from_initial(coeffs, X0, Z0);
  }
  log_info("neither beta nor an initial condition given; using beta = 1");
  return 1.0;
}

/// Orbit seed when no initial condition is given: the midpoint of the
/// first positive stretch of the radicand found in the scan window.
double resolve_seed(const Radicand& F, double Z_hi) {
  const auto roots = radicand_roots(F, Z_hi * 1e-6, Z_hi);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const double mid = 0.5 * (roots[i] + roots[i + 1]);
    if (F(mid) > 0.0) return mid;
  }
  if (roots.size() == 1 && F(0.5 * roots[0]) > 0.0) return 0.5 * roots[0];
  throw NoOrbitError("no bounded Z orbit inside the scan window");
}

std::string method_name(SolutionMethod m) {
  switch (m) {
    case SolutionMethod::ReferenceODE: return "ode";
    case SolutionMethod::Quadrature: return "quadrature";
    case SolutionMethod::EllipticClosedForm: return "elliptic";
    case SolutionMethod::Peakon: return "peakon";
  }
  return "?";
}

Trajectory trajectory_from_z_samples(const VelocityCoefficients& coeffs,
                                     const std::vector<ZSample>& zs, double beta,
                                     SolutionMethod method) {
  Trajectory traj;
  traj.method = method;
  const XReconstruction xr = reconstruct_x(coeffs, zs, beta);
  traj.samples.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    traj.samples.push_back({zs[i].t, xr.x[i], zs[i].Z / coeffs.k});
  return traj;
}

Trajectory solve_quadrature(const RunConfig& cfg, const VelocityCoefficients& coeffs,
                            double beta) {
  const Radicand F = Radicand::full(coeffs, beta);
  const double Z_hi = default_scan_limit(cfg.params);
  double Z0;
  int sign0 = +1;
  if (cfg.initial) {
    Z0 = coeffs.k * cfg.initial->z0;
    sign0 = cfg.initial->sign;
  } else {
    Z0 = resolve_seed(F, Z_hi);
  }
  const ZOrbit orbit = make_orbit(F, Z0, Z_hi);
  const double Z_start = cfg.initial ? Z0 : orbit.z_min;
  ZQuadratureSolution sol(orbit, Z_start, sign0);
  const auto times = sample_times(cfg);
  const auto zs = kernels::sample_orbit(sol, times);
  Trajectory traj = trajectory_from_z_samples(coeffs, zs, beta, SolutionMethod::Quadrature);
  traj.orbit = orbit;
  traj.drift = drift_per_period(coeffs, orbit);
  return traj;
}

Trajectory solve_elliptic(const RunConfig& cfg, const VelocityCoefficients& coeffs, double beta) {
  const EllipticReduction red = elliptic_reduction_for(coeffs, beta);
  const auto times = sample_times(cfg);
  std::vector<ZSample> zs;
  zs.reserve(times.size());
  for (double t : times) zs.push_back(closed_form_z_elliptic(t, red));
  Trajectory traj = trajectory_from_z_samples(coeffs, zs, beta, SolutionMethod::EllipticClosedForm);
  if (red.kind == EllipticCase::Case1a) {
    const Radicand F6 = Radicand::truncated(coeffs, beta, 6);
    const auto& roots = std::get<ThreeRealRoots>(red.roots);
    ZOrbit orbit{F6, beta, 1.0 / std::sqrt(roots.z3), 1.0 / std::sqrt(roots.z2),
                 elliptic_z_period(red), coeffs};
    traj.orbit = orbit;
    traj.drift = drift_per_period(coeffs, orbit);
  }
  return traj;
}

Trajectory solve_ode(const RunConfig& cfg, const VelocityCoefficients& coeffs) {
  TrajectoryState init{0.0, 0.0, cfg.params.h0 / 2.0};
  if (cfg.initial) init = {0.0, cfg.initial->x0, cfg.initial->z0};
  const auto times = sample_times(cfg);
  return integrate_reference(coeffs, init, times, 1e-10);
}

Trajectory solve_peakon(const RunConfig& cfg, const VelocityCoefficients& coeffs) {
  // const1 from x0, const2 from z0 on the rising (pre-asymptote) branch:
  // z0 = (2/k) atanh(exp(const2)) with const2 < 0.
  double x0 = kPi / (2.0 * coeffs.k);
  double z0 = cfg.params.h0 / 2.0;
  if (cfg.initial) {
    x0 = cfg.initial->x0;
    z0 = cfg.initial->z0;
  }
  const double w0 = std::tanh(coeffs.k * z0 / 2.0);
  if (!(w0 > 0.0 && w0 < 1.0))
    throw ValidationError("peakon: initial z0 must be positive and finite");
  const double const2 = std::log(w0);
  const double const1 = x0;
  Trajectory traj;
  traj.method = SolutionMethod::Peakon;
  for (double t : sample_times(cfg)) {
    try {
      const PeakonState ps = peakon_state(coeffs, const1, const2, t);
      traj.samples.push_back(ps.state);
    } catch (const AsymptoteError&) {
      log_warn("peakon sample at the asymptote skipped");
    }
  }
  return traj;
}

void write_trajectory_files(const RunConfig& cfg, const VelocityCoefficients& coeffs,
                            const Trajectory& traj) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(traj.samples.size());
  const std::string tag = method_name(traj.method);
  for (const auto& s : traj.samples) {
    const auto [u, v] = velocity_field(coeffs, s.x, s.z, s.t);
    const double X = coeffs.k * (s.x - coeffs.c * s.t);
    rows.push_back({csv_number(s.t), csv_number(s.x), csv_number(s.z), csv_number(u),
                    csv_number(v), csv_number(X), csv_number(coeffs.k * s.z), tag});
  }
  write_csv(cfg.output + "_trajectory.csv", {"t", "x", "z", "u", "v", "X", "Z", "method"}, rows);
  if (cfg.emit_svg) {
    std::vector<std::pair<double, double>> line;
    line.reserve(traj.samples.size());
    for (const auto& s : traj.samples) line.emplace_back(s.x, s.z);
    write_svg(cfg.output + "_trajectory.svg", line);
  }
}

void run_speed(const RunConfig& cfg, std::ostream& out) {
  const VelocityCoefficients coeffs = coefficients(cfg.params);
  out << "c = " << csv_number(coeffs.c) << "\n"
      << "A = " << csv_number(coeffs.A) << "\n"
      << "B = " << csv_number(coeffs.B) << "\n"
      << "C = " << csv_number(coeffs.C) << "\n";
}

void run_field(const RunConfig& cfg, std::ostream& out) {
  const VelocityCoefficients coeffs = coefficients(cfg.params);
  kernels::FieldGrid grid;
  grid.x0 = cfg.grid.x0.value_or(0.0);
  grid.x1 = cfg.grid.x1.value_or(2.0 * kPi / cfg.params.k);
  grid.z0 = cfg.grid.z0.value_or(0.0);
  grid.z1 = cfg.grid.z1.value_or(cfg.params.h0);
  grid.nx = cfg.grid.nx;
  grid.nz = cfg.grid.nz;
  grid.t = cfg.grid.t;
  const auto points = kernels::field_grid(cfg.params, coeffs, grid);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(points.size());
  for (const auto& p : points)
    rows.push_back({csv_number(p.x), csv_number(p.z), csv_number(p.u), csv_number(p.v),
                    csv_number(p.p), csv_number(p.eta), p.in_column ? "1" : "0"});
  write_csv(cfg.output + "_field.csv", {"x", "z", "u", "v", "p", "eta", "in_column"}, rows);
  out << "field: wrote " << rows.size() << " grid points\n";
}

void run_trajectory(const RunConfig& cfg, std::ostream& out) {
  const VelocityCoefficients coeffs = coefficients(cfg.params);
  const Trajectory traj = solve_trajectory(cfg);
  write_trajectory_files(cfg, coeffs, traj);
  out << "trajectory: method " << method_name(traj.method) << ", " << traj.samples.size()
      << " samples";
  if (traj.orbit) out << ", Z period " << csv_number(traj.orbit->period);
  if (traj.drift) out << ", drift per period " << csv_number(*traj.drift);
  out << "\n";
}

void run_stagnation(const RunConfig& cfg, std::ostream& out) {
  const VelocityCoefficients coeffs = coefficients(cfg.params);
  const double beta = resolve_beta(cfg, coeffs);
  const double Z_hi = default_scan_limit(cfg.params);
  const auto roots = find_z_stagnation(beta, coeffs, Z_hi);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(roots.size());
  for (const auto& r : roots)
    rows.push_back({csv_number(r.Z), csv_number(r.Z / coeffs.k),
                    r.kind == StagnationKind::Equilibrium ? "equilibrium" : "turning_point",
                    csv_number(r.residual), csv_number(r.F_derivative)});
  write_csv(cfg.output + "_stagnation.csv", {"Z", "z", "kind", "residual", "dF_dZ"}, rows);
  out << "stagnation: " << rows.size() << " roots in (0, " << csv_number(Z_hi) << "]\n";
}

const char* case_name(TrajectoryCase c) {
  switch (c) {
    case TrajectoryCase::Case1a: return "Case1a";
    case TrajectoryCase::Case1b: return "Case1b";
    case TrajectoryCase::Case2: return "Case2";
    case TrajectoryCase::HyperellipticOnly: return "HyperellipticOnly";
    case TrajectoryCase::Degenerate: return "Degenerate";
  }
  return "?";
}

void run_reproduce(const RunConfig& cfg_in, Preset preset, std::ostream& out) {
  RunConfig cfg = preset_config(preset);
  cfg.output = cfg_in.output;
  const PresetReference ref = preset_reference(preset);
  const VelocityCoefficients coeffs = coefficients(cfg.params);
  const double beta = *cfg.beta;
  const TrajectoryCase cls = classify_case(coeffs, beta);

  std::vector<std::vector<std::string>> rows;
  auto add = [&rows](const std::string& name, double computed, double reference) {
    const double rel = std::abs(computed - reference) / std::max(std::abs(reference), 1e-300);
    rows.push_back({name, csv_number(computed), csv_number(reference), csv_number(rel)});
  };
  add("c", coeffs.c, ref.c);
  add("A", coeffs.A, ref.A);
  add("B", coeffs.B, ref.B);
  if (ref.z_hat0) {
    const EllipticReduction red = elliptic_reduction_for(coeffs, beta);
    const auto& one = std::get<OneRealRoot>(red.roots);
    add("z_hat0", one.z0, *ref.z_hat0);
    add("p", one.p, *ref.quad_p);
    add("q", one.q, *ref.quad_q);
    add("threshold", red.validity_threshold, *ref.threshold);
  }
  rows.push_back({"classification", case_name(cls), ref.classification,
                  std::string(case_name(cls)) == ref.classification ? "0" : "1"});
  write_csv(cfg.output + "_summary.csv", {"quantity", "computed", "reference", "rel_err"}, rows);

  for (const auto& row : rows)
    out << row[0] << ": computed " << row[1] << ", reference " << row[2] << " (diff " << row[3]
        << ")\n";

  if (cls == TrajectoryCase::Case1a) {
    const Trajectory traj = solve_trajectory(cfg);
    write_trajectory_files(cfg, coeffs, traj);
    out << "trajectory: method " << method_name(traj.method) << ", Z period "
        << csv_number(traj.orbit ? traj.orbit->period : 0.0) << ", drift per period "
        << csv_number(traj.drift.value_or(0.0)) << "\n";
  } else {
    out << "no closed-form orbit for this preset; trajectory output skipped\n";
  }
}

}  // namespace

Trajectory solve_trajectory(const RunConfig& cfg) {
  const VelocityCoefficients coeffs = coefficients(cfg.params);
  const double beta = resolve_beta(cfg, coeffs);

  switch (cfg.method) {
    case RequestedMethod::ReferenceODE:
      return solve_ode(cfg, coeffs);
    case RequestedMethod::Quadrature:
      return solve_quadrature(cfg, coeffs, beta);
    case RequestedMethod::EllipticClosedForm:
      return solve_elliptic(cfg, coeffs, beta);
    case RequestedMethod::Peakon:
      return solve_peakon(cfg, coeffs);
    case RequestedMethod::Auto:
      break;
  }

  // Auto: closed form only when the classification proves it applies.
  TrajectoryCase cls = TrajectoryCase::HyperellipticOnly;
  try {
    cls = classify_case(coeffs, beta);
  } catch (const Error&) {
    cls = TrajectoryCase::HyperellipticOnly;
  }
  if (cls == TrajectoryCase::Case1a) {
    try {
      return solve_elliptic(cfg, coeffs, beta);
    } catch (const OutOfValidityWindow& e) {
      log_warn(std::string("elliptic closed form left its validity window (") + e.what() +
               "); falling back to quadrature");
    }
  }
  try {
    return solve_quadrature(cfg, coeffs, beta);
  } catch (const NoOrbitError& e) {
    log_warn(std::string("no periodic orbit (") + e.what() + "); falling back to the ODE");
    return solve_ode(cfg, coeffs);
  }
}

void run(const RunConfig& cfg, const std::string& subcommand, std::optional<Preset> preset,
         std::ostream& out) {
  if (subcommand == "speed") return run_speed(cfg, out);
  if (subcommand == "field") return run_field(cfg, out);
  if (subcommand == "trajectory") return run_trajectory(cfg, out);
  if (subcommand == "stagnation") return run_stagnation(cfg, out);
  if (subcommand == "reproduce") {
    if (!preset) throw ValidationError("reproduce requires --preset fig3|fig4|fig5|neg20");
    return run_reproduce(cfg, *preset, out);
  }
  throw ValidationError("unknown subcommand: " + subcommand);
}

}  // namespace vortexpaths::io
