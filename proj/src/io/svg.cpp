#include "vortexpaths/io/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "vortexpaths/errors.hpp"

namespace vortexpaths::io {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<std::pair<double, double>>& polyline) {
  if (polyline.size() < 2)
    throw ValidationError("write_svg: a polyline needs at least two points");
  double xmin = polyline[0].first, xmax = xmin;
  double zmin = polyline[0].second, zmax = zmin;
  for (const auto& [x, z] : polyline) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    zmin = std::min(zmin, z);
    zmax = std::max(zmax, z);
  }
  if (xmax == xmin && zmax == zmin)
    throw ValidationError("write_svg: degenerate polyline, all points coincide");
  // Pad the flat axis so strokes stay visible on straight segments.
  double dx = xmax - xmin, dz = zmax - zmin;
  if (dx == 0.0) dx = dz;
  if (dz == 0.0) dz = dx;
  const double mx = 0.05 * dx, mz = 0.05 * dz;

  // Flip vertically by plotting y = -z; the viewBox covers [-zmax, -zmin].
  std::string doc = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  doc += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"";
  doc += num(xmin - mx) + " " + num(-(zmax + mz)) + " " + num(dx + 2 * mx) + " " +
         num(dz + 2 * mz) + "\">\n";
  doc += "  <polyline fill=\"none\" stroke=\"#1f3b70\" stroke-width=\"" +
         num(0.004 * std::max(dx + 2 * mx, dz + 2 * mz)) + "\" points=\"";
  for (std::size_t i = 0; i < polyline.size(); ++i) {
    if (i) doc += ' ';
    doc += num(polyline[i].first) + "," + num(-polyline[i].second);
  }
  doc += "\"/>\n</svg>\n";
  return doc;
}

void write_svg(const std::string& path, const std::vector<std::pair<double, double>>& polyline) {
  const std::string doc = render_svg(polyline);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_svg: cannot open " + path);
  out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  if (!out) throw IoError("write_svg: write failed for " + path);
}

}  // namespace vortexpaths::io
