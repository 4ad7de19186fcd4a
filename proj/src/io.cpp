#include "uavcell/io.hpp"

#include <charconv>
#include <stdexcept>

namespace uavcell::io {

std::string format_double(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, p);
}

namespace {

void append_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

} // namespace

CsvTable::CsvTable(std::vector<std::string> header) : width_(header.size()) {
  if (header.empty()) throw std::invalid_argument("CsvTable: empty header");
  append_row(body_, header);
}

void CsvTable::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_)
    throw std::invalid_argument("CsvTable: row width mismatch");
  append_row(body_, cells);
}

std::string CsvTable::str() const { return body_; }

} // namespace uavcell::io
