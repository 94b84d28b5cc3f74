#include "vortexpaths/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "vortexpaths/errors.hpp"

namespace vortexpaths::io {

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_row(std::string& doc, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) doc += ',';
    doc += escape(row[i]);
  }
  doc += '\n';
}

}  // namespace

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows)
    if (row.size() != header.size())
      throw std::invalid_argument("write_csv: rows must be rectangular and match the header");
  std::string doc;
  append_row(doc, header);
  for (const auto& row : rows) append_row(doc, row);
  return doc;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  const std::string doc = render_csv(header, rows);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("write_csv: cannot open " + path);
  out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  if (!out) throw IoError("write_csv: write failed for " + path);
}

}  // namespace vortexpaths::io
