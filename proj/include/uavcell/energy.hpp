#ifndef UAVCELL_ENERGY_HPP
#define UAVCELL_ENERGY_HPP

#include "uavcell/analytic.hpp"
#include "uavcell/phy.hpp"

namespace uavcell::energy {

/// Fixed-wing propulsion model coefficients for steady circular flight.
struct EnergyParams {
  double c1 = 9.26e-4; // parasitic drag coefficient
  double c2 = 2250.0;  // induced drag coefficient
  double g = 9.8;      // gravitational acceleration, m/s^2

  void validate() const;
};

/// (c1 + c2/(g^2 r_U^2)) V^3 + c2/V, Watts.
double propulsion_power(double V, double r_U, const EnergyParams& ep);

/// Speed minimizing propulsion_power at fixed r_U:
/// V* = (c2 / (3 (c1 + c2/(g^2 r_U^2))))^(1/4).
double optimal_speed(double r_U, const EnergyParams& ep);

/// Delivered UAV bits per Joule of transmit-plus-propulsion energy; the
/// flying period cancels. theta_U in bps/Hz/m^2.
double energy_efficiency(double theta_U, const analytic::DesignVars& vars,
                         const phy::SystemParams& p, const EnergyParams& ep);

struct EnergyReport {
  double r_U;      // trajectory radius, m
  double V_opt;    // optimal cruise speed, m/s
  double P_cir;    // propulsion power at V_opt, W
  double theta_U;  // UAV-area spatial throughput, bps/Hz/m^2
  double ee;       // bits per Joule
};

/// Full worked report at the given design point.
EnergyReport make_report(double theta_U, const analytic::DesignVars& vars,
                         const phy::SystemParams& p, const EnergyParams& ep);

} // namespace uavcell::energy

#endif
