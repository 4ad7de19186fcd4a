#include "uavcell/energy.hpp"

#include "uavcell/units.hpp"

#include <cmath>
#include <stdexcept>

namespace uavcell::energy {

void EnergyParams::validate() const {
  if (!(c1 > 0 && c2 > 0 && g > 0))
    throw std::invalid_argument("EnergyParams: c1, c2, g must be > 0");
}

double propulsion_power(double V, double r_U, const EnergyParams& ep) {
  if (V <= 0.0) throw std::domain_error("propulsion_power: V must be > 0");
  if (r_U <= 0.0) throw std::domain_error("propulsion_power: r_U must be > 0");
  return (ep.c1 + ep.c2 / (ep.g * ep.g * r_U * r_U)) * V * V * V + ep.c2 / V;
}

double optimal_speed(double r_U, const EnergyParams& ep) {
  if (r_U <= 0.0) throw std::domain_error("optimal_speed: r_U must be > 0");
  return std::pow(ep.c2 / (3.0 * (ep.c1 + ep.c2 / (ep.g * ep.g * r_U * r_U))),
                  0.25);
}

double energy_efficiency(double theta_U, const analytic::DesignVars& vars,
                         const phy::SystemParams& p, const EnergyParams& ep) {
  if (theta_U < 0.0) throw std::domain_error("energy_efficiency: theta_U < 0");
  const double area = units::kPi * (p.r_G * p.r_G - vars.r_I * vars.r_I);
  const double V_opt = optimal_speed(vars.r_U, ep);
  return p.W * area * theta_U / (p.P_U + propulsion_power(V_opt, vars.r_U, ep));
}

EnergyReport make_report(double theta_U, const analytic::DesignVars& vars,
                         const phy::SystemParams& p, const EnergyParams& ep) {
  EnergyReport r{};
  r.r_U = vars.r_U;
  r.V_opt = optimal_speed(vars.r_U, ep);
  r.P_cir = propulsion_power(r.V_opt, vars.r_U, ep);
  r.theta_U = theta_U;
  r.ee = energy_efficiency(theta_U, vars, p, ep);
  return r;
}

} // namespace uavcell::energy
