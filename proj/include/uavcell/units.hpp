#ifndef UAVCELL_UNITS_HPP
#define UAVCELL_UNITS_HPP

#include <stdexcept>
#include <string>

namespace uavcell::units {

/// Exact speed of light in vacuum, m/s.
inline constexpr double kSpeedOfLight = 299792458.0;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double lin);
double deg_to_rad(double deg);
double rad_to_deg(double rad);

/// Physical dimension expected for a config value; selects the accepted
/// unit suffixes and the conversion into linear SI.
enum class Dimension {
  Dimensionless,
  Frequency,    // Hz, kHz, MHz, GHz
  Power,        // W, mW, dBm
  PowerDensity, // W/Hz, dBm/Hz
  Gain,         // bare linear, dB, dBi
  Length,       // m, km
  Angle,        // rad (bare), deg
  AreaDensity,  // /m^2, /km^2
  Speed,        // m/s
  Rate,         // bps, kbps, Mbps, Gbps
  Count,
  Probability,
};

struct UnitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "value [suffix]" (e.g. "-174 dBm/Hz", "10 MHz", "500", "30 deg")
/// into linear SI for the given dimension. Throws UnitError on a malformed
/// number or a suffix not valid for the dimension.
double parse_quantity(const std::string& text, Dimension dim);

} // namespace uavcell::units

#endif
