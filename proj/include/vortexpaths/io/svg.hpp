#pragma once

#include <string>
#include <utility>
#include <vector>

namespace vortexpaths::io {

/// Standalone SVG with a single polyline of (x, z) points, y-axis flipped
/// so greater z is up, viewBox fitted to the data with a 5% margin. The
/// polyline must have at least 2 points and nonzero extent; all-identical
/// points raise ValidationError.
void write_svg(const std::string& path, const std::vector<std::pair<double, double>>& polyline);

std::string render_svg(const std::vector<std::pair<double, double>>& polyline);

}  // namespace vortexpaths::io
