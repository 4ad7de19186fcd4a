#include "uavcell/units.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace uavcell::units {

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
double watts_to_dbm(double watts) {
  if (watts <= 0.0) throw UnitError("power must be > 0 W for dBm conversion");
  return 10.0 * std::log10(watts * 1e3);
}
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) {
  if (lin <= 0.0) throw UnitError("gain must be > 0 for dB conversion");
  return 10.0 * std::log10(lin);
}
double deg_to_rad(double deg) { return deg * kPi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

namespace {

struct Suffix {
  const char* name;
  bool decibel;   // value is in dB-like scale
  double scale;   // linear multiplier (ignored for decibel)
  double ref;     // linear reference for decibel units (e.g. 1 mW)
};

const Suffix* suffix_table(Dimension dim, std::size_t& count) {
  static const Suffix freq[] = {{"Hz", false, 1.0, 0}, {"kHz", false, 1e3, 0},
                                {"MHz", false, 1e6, 0}, {"GHz", false, 1e9, 0}};
  static const Suffix power[] = {{"W", false, 1.0, 0}, {"mW", false, 1e-3, 0},
                                 {"dBm", true, 0, 1e-3}};
  static const Suffix pdens[] = {{"W/Hz", false, 1.0, 0}, {"dBm/Hz", true, 0, 1e-3}};
  static const Suffix gain[] = {{"dBi", true, 0, 1.0}, {"dB", true, 0, 1.0}};
  static const Suffix length[] = {{"m", false, 1.0, 0}, {"km", false, 1e3, 0}};
  static const Suffix angle[] = {{"rad", false, 1.0, 0},
                                 {"deg", false, kPi / 180.0, 0}};
  static const Suffix adens[] = {{"/m^2", false, 1.0, 0}, {"/m2", false, 1.0, 0},
                                 {"/km^2", false, 1e-6, 0}, {"/km2", false, 1e-6, 0}};
  static const Suffix speed[] = {{"m/s", false, 1.0, 0}};
  static const Suffix rate[] = {{"bps", false, 1.0, 0}, {"kbps", false, 1e3, 0},
                                {"Mbps", false, 1e6, 0}, {"Gbps", false, 1e9, 0}};
  switch (dim) {
    case Dimension::Frequency: count = 4; return freq;
    case Dimension::Power: count = 3; return power;
    case Dimension::PowerDensity: count = 2; return pdens;
    case Dimension::Gain: count = 2; return gain;
    case Dimension::Length: count = 2; return length;
    case Dimension::Angle: count = 2; return angle;
    case Dimension::AreaDensity: count = 4; return adens;
    case Dimension::Speed: count = 1; return speed;
    case Dimension::Rate: count = 4; return rate;
    default: count = 0; return nullptr;
  }
}

} // namespace

double parse_quantity(const std::string& text, Dimension dim) {
  const char* s = text.c_str();
  char* end = nullptr;
  double value = std::strtod(s, &end);
  if (end == s) throw UnitError("not a number: '" + text + "'");
  while (*end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
  std::string suffix(end);
  while (!suffix.empty() && std::isspace(static_cast<unsigned char>(suffix.back())))
    suffix.pop_back();

  if (suffix.empty()) {
    // Bare numbers are linear SI: Hz, W, m, rad, /m^2 etc.
    return value;
  }
  std::size_t count = 0;
  const Suffix* table = suffix_table(dim, count);
  for (std::size_t i = 0; i < count; ++i) {
    if (suffix == table[i].name) {
      if (table[i].decibel) return std::pow(10.0, value / 10.0) * table[i].ref;
      return value * table[i].scale;
    }
  }
  throw UnitError("unknown unit suffix '" + suffix + "' in '" + text + "'");
}

} // namespace uavcell::units
