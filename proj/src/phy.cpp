#include "uavcell/phy.hpp"

#include "uavcell/units.hpp"

#include <cmath>
#include <string>

namespace uavcell::phy {

namespace {
void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(std::string("SystemParams: ") + what);
}
} // namespace

void SystemParams::validate() const {
  require(f_c > 0, "f_c must be > 0");
  require(W > 0, "W must be > 0");
  require(N0 > 0, "N0 must be > 0");
  require(H_U > 0, "H_U must be > 0");
  require(H_G > 0, "H_G must be > 0");
  require(r_G > 0, "r_G must be > 0");
  require(G_G > 0, "G_G must be > 0");
  require(n >= 2.0, "n must be >= 2");
  require(psi > 0 && psi < units::kPi, "psi must be in (0, pi)");
  require(Phi_G > 0 && Phi_G <= 2 * units::kPi, "Phi_G must be in (0, 2*pi]");
  require(P_U > 0, "P_U must be > 0");
  require(P_G > 0, "P_G must be > 0");
  require(lambda > 0, "lambda must be > 0");
  require(P_out_max > 0 && P_out_max < 1, "P_out_max must be in (0,1)");
  require(mu >= 1.0, "mu must be >= 1");
}

double noise_power(const SystemParams& p) { return p.N0 * p.W; }

double ref_gain(const SystemParams& p) {
  const double x = 4.0 * units::kPi * p.f_c / units::kSpeedOfLight;
  return 1.0 / (x * x);
}

double eta0(const SystemParams& p) { return ref_gain(p) / noise_power(p); }

double kappa0(const SystemParams& p) {
  return ref_gain(p) * p.G_G / noise_power(p);
}

double uav_beam_gain(double d_max, double H_U) {
  if (d_max <= 0.0)
    throw std::domain_error("uav_beam_gain: coverage radius d_max must be > 0");
  if (H_U <= 0.0) throw std::domain_error("uav_beam_gain: H_U must be > 0");
  const double phi = std::atan(d_max / H_U);
  return AntennaPattern::kG0 / (phi * phi);
}

double uav_channel_gain(double d, const SystemParams& p) {
  return ref_gain(p) / (d * d + p.H_U * p.H_U);
}

double gbs_avg_channel_gain(double r, const SystemParams& p) {
  return ref_gain(p) * std::pow(p.H_G * p.H_G + r * r, -p.n / 2.0);
}

} // namespace uavcell::phy
