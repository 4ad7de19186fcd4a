#ifndef UAVCELL_PHY_HPP
#define UAVCELL_PHY_HPP

#include <stdexcept>

namespace uavcell::phy {

/// Flat-top directional antenna on the UAV: constant main-lobe gain
/// G0/Phi_U^2 inside the beam, zero sidelobes. g0 is fixed to 0; a nonzero
/// sidelobe would invalidate the reuse scheme's zero-interference model.
struct AntennaPattern {
  static constexpr double kG0 = (30000.0 / 4.0) * (3.141592653589793238462643383279502884 / 180.0) *
                                (3.141592653589793238462643383279502884 / 180.0); // ~2.2846
  static constexpr double kSidelobeGain = 0.0;
};

/// Immutable physical/system constants. All values linear SI (Hz, W, m,
/// rad, users/m^2); dB-style units are converted at the config boundary.
struct SystemParams {
  double f_c = 2e9;        // carrier frequency, Hz
  double W = 10e6;         // total bandwidth, Hz
  double N0 = 3.9810717055349565e-21; // noise PSD, W/Hz (-174 dBm/Hz)
  double H_U = 100.0;      // UAV altitude, m
  double H_G = 20.0;       // GBS antenna height, m
  double r_G = 1000.0;     // cell radius, m
  double G_G = 39.810717055349734; // GBS antenna gain, linear (16 dBi)
  double n = 3.0;          // GBS path-loss exponent
  double psi = 0.5235987755982988;  // UAV association central angle, rad (pi/6)
  double Phi_G = 4.1887902047863905; // GBS sector central angle, rad (4*pi/3)
  double P_U = 0.1;        // UAV max transmit power, W (20 dBm)
  double P_G = 10.0;       // GBS max transmit power, W (40 dBm)
  double lambda = 1e-3;    // user density, users/m^2
  double P_out_max = 0.01; // outage cap
  double mu = 1.0;         // bandwidth-crowding factor, >= 1

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  SystemParams validated() const { validate(); return *this; }
};

/// sigma^2 = N0 * W.
double noise_power(const SystemParams& p);

/// beta0 = alpha0 = (4*pi*f_c/c)^-2, channel power gain at 1 m.
double ref_gain(const SystemParams& p);

/// eta0 = beta0 / sigma^2.
double eta0(const SystemParams& p);

/// kappa0 = alpha0 * G_G / sigma^2.
double kappa0(const SystemParams& p);

/// Main-lobe gain G0 / arctan(d_max/H_U)^2 with the beamwidth opened just
/// wide enough to cover ground radius d_max. Strictly decreasing in d_max.
/// Throws std::domain_error for d_max <= 0 (zero coverage radius).
double uav_beam_gain(double d_max, double H_U);

/// Free-space UAV-to-ground channel power gain beta0 / (d^2 + H_U^2).
double uav_channel_gain(double d, const SystemParams& p);

/// Average GBS-to-ground channel power gain alpha0 * (H_G^2 + r^2)^(-n/2).
double gbs_avg_channel_gain(double r, const SystemParams& p);

} // namespace uavcell::phy

#endif
