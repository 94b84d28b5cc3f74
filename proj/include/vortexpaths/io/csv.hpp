#pragma once

#include <string>
#include <vector>

namespace vortexpaths::io {

/// Shortest representation that round-trips a double (up to 17 significant
/// digits, '.' decimal separator, locale-independent).
std::string csv_number(double v);

/// RFC-4180 style CSV: comma separated, LF line endings, first line is the
/// header. Fields containing comma, quote or newline are quoted. Rows must
/// be rectangular (same width as the header). Throws IoError on filesystem
/// failure.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// The same document as a string (what write_csv puts on disk).
std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

}  // namespace vortexpaths::io
