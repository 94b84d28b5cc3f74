#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "vortexpaths/io/config.hpp"
#include "vortexpaths/io/presets.hpp"
#include "vortexpaths/trajectory.hpp"

namespace vortexpaths::io {

/// Process exit codes of the CLI.
enum ExitCode : int { kOk = 0, kValidation = 1, kNumerical = 2, kIo = 3 };

/// Solves the particle path requested by the config. Auto picks the
/// elliptic closed form for Case1a, otherwise the quadrature inversion,
/// and falls back to the reference ODE when no bounded orbit exists; an
/// OutOfValidityWindow under Auto degrades to the quadrature path with a
/// warning, never silently to a wrong closed form.
Trajectory solve_trajectory(const RunConfig& cfg);

/// Executes one subcommand (speed | field | trajectory | stagnation |
/// reproduce) and writes its output files under cfg.output. Throws; the
/// CLI maps exceptions to exit codes.
void run(const RunConfig& cfg, const std::string& subcommand, std::optional<Preset> preset,
         std::ostream& out);

}  // namespace vortexpaths::io
