#pragma once

#include <functional>
#include <vector>

namespace vortexpaths {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed once per n by Newton iteration on the Legendre polynomial and
/// cached (thread-safe static initialization).
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int n);

/// Integral of f over [a, b] with one n-point Gauss-Legendre panel.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n = 64);

/// Composite rule: `panels` equal panels of the n-point rule.
double gl_integrate_composite(const std::function<double(double)>& f, double a, double b,
                              int panels, int n = 64);

}  // namespace vortexpaths
