#ifndef UAVCELL_IO_HPP
#define UAVCELL_IO_HPP

#include <string>
#include <vector>

namespace uavcell::io {

/// Shortest decimal representation that round-trips the double exactly;
/// keeps golden CSV files stable across platforms.
std::string format_double(double v);

/// Minimal CSV assembly with a frozen header. Every row must match the
/// header width.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::size_t width_;
  std::string body_;
};

} // namespace uavcell::io

#endif
