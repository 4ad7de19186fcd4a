#include "uavcell/analytic.hpp"

#include "uavcell/units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavcell::analytic {

using units::kPi;

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Orthogonal: return "orthogonal";
    case Scheme::Reuse: return "reuse";
    case Scheme::GbsOnly: return "gbs-only";
  }
  return "?";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "orthogonal") return Scheme::Orthogonal;
  if (name == "reuse") return Scheme::Reuse;
  if (name == "gbs-only" || name == "gbs_only") return Scheme::GbsOnly;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

void DesignVars::validate(const phy::SystemParams& p) const {
  if (scheme == Scheme::Orthogonal && !(rho >= 0.0 && rho <= 1.0))
    throw std::invalid_argument("DesignVars: rho must be in [0,1]");
  if (!(r_I >= 0.0 && r_I <= p.r_G))
    throw std::invalid_argument("DesignVars: r_I must be in [0, r_G]");
  if (scheme != Scheme::GbsOnly && !(r_U >= r_I && r_U <= p.r_G))
    throw std::invalid_argument("DesignVars: r_U must be in [r_I, r_G]");
}

double DesignVars::uav_band_fraction() const {
  switch (scheme) {
    case Scheme::Orthogonal: return rho;
    case Scheme::Reuse: return 1.0;
    case Scheme::GbsOnly: return 0.0;
  }
  return 0.0;
}

double DesignVars::gbs_band_fraction() const {
  return scheme == Scheme::Orthogonal ? 1.0 - rho : 1.0;
}

BandwidthTerms bandwidth_terms(const DesignVars& vars, const phy::SystemParams& p) {
  BandwidthTerms out{0.0, 0.0};
  if (vars.r_I <= 0.0)
    throw std::domain_error("bandwidth_terms: GBS side is empty (r_I = 0)");
  if (vars.r_I >= p.r_G)
    throw std::domain_error("bandwidth_terms: UAV side is empty (r_I = r_G)");
  out.b_G = vars.gbs_band_fraction() / (p.lambda * kPi * vars.r_I * vars.r_I);
  out.b_min = 2.0 * vars.uav_band_fraction() /
              (p.mu * p.lambda * (p.r_G * p.r_G - vars.r_I * vars.r_I) * p.psi);
  return out;
}

double radial_moment(double r_I, const phy::SystemParams& p) {
  const double e = (2.0 + p.n) / 2.0;
  return (std::pow(p.H_G * p.H_G + r_I * r_I, e) - std::pow(p.H_G, 2.0 + p.n)) /
         (2.0 + p.n);
}

namespace {

// log2(1 + eta0*P_U*G_U(d)/(rho*(d^2+H_U^2)))
double uav_rate_bits(double rho, double d_max, const phy::SystemParams& p) {
  const double snr = phy::eta0(p) * p.P_U * phy::uav_beam_gain(d_max, p.H_U) /
                     (rho * (d_max * d_max + p.H_U * p.H_U));
  return std::log2(1.0 + snr);
}

double uav_throughput_at(double rho, double r_I, double d_max,
                         const phy::SystemParams& p) {
  if (rho <= 0.0) return 0.0;
  if (!(r_I < p.r_G))
    throw std::domain_error("uav throughput: r_I must be < r_G");
  return rho / (p.mu * p.lambda * kPi * (p.r_G * p.r_G - r_I * r_I)) *
         uav_rate_bits(rho, d_max, p);
}

} // namespace

double uav_common_throughput(const DesignVars& vars, const phy::SystemParams& p) {
  const double rho = vars.uav_band_fraction();
  if (rho <= 0.0) return 0.0;
  const double d_max = geometry::worst_case_distance(vars.r_U, vars.segment(p));
  return uav_throughput_at(rho, vars.r_I, d_max, p);
}

double uav_common_throughput_timeavg(const DesignVars& vars,
                                     const phy::SystemParams& p) {
  const double rho = vars.uav_band_fraction();
  if (rho <= 0.0) return 0.0;
  const double d_max = geometry::worst_case_distance(vars.r_U, vars.segment(p));
  const double b_min = bandwidth_terms(vars, p).b_min;
  return (p.psi / (2.0 * kPi)) * b_min * uav_rate_bits(rho, d_max, p);
}

double uav_max_throughput(Scheme scheme, double rho, double r_I,
                          const phy::SystemParams& p) {
  const double rho_eff = scheme == Scheme::Reuse ? 1.0 : rho;
  if (rho_eff <= 0.0) return 0.0;
  const auto opt = geometry::optimal_radius({r_I, p.r_G, p.psi});
  return uav_throughput_at(rho_eff, r_I, opt.d_max, p);
}

double gbs_avg_snr(const DesignVars& vars, const phy::SystemParams& p) {
  if (vars.r_I <= 0.0) throw std::domain_error("gbs_avg_snr: r_I must be > 0");
  const double frac = vars.gbs_band_fraction();
  if (frac <= 0.0)
    throw std::domain_error("gbs_avg_snr: GBS has zero bandwidth (rho = 1)");
  return phy::kappa0(p) * p.P_G * vars.r_I * vars.r_I /
         (2.0 * frac * radial_moment(vars.r_I, p));
}

double gbs_power_profile(double r, const DesignVars& vars,
                         const phy::SystemParams& p) {
  if (r < 0.0 || r > vars.r_I)
    throw std::domain_error("gbs_power_profile: r outside [0, r_I]");
  const double gamma = gbs_avg_snr(vars, p);
  double b_G;
  if (vars.scheme == Scheme::Reuse) {
    // Per-user share inside the active sector.
    b_G = 2.0 / (p.lambda * vars.r_I * vars.r_I * p.Phi_G);
  } else {
    b_G = bandwidth_terms(vars, p).b_G;
  }
  return gamma * b_G * phy::noise_power(p) *
         std::pow(p.H_G * p.H_G + r * r, p.n / 2.0) / (phy::ref_gain(p) * p.G_G);
}

double outage_exponent(Scheme scheme, double rho, double r_I, double nu,
                       const phy::SystemParams& p) {
  if (r_I <= 0.0) throw std::domain_error("outage_exponent: r_I must be > 0");
  if (nu < 0.0) throw std::domain_error("outage_exponent: nu must be >= 0");
  const double frac = scheme == Scheme::Orthogonal ? 1.0 - rho : 1.0;
  if (frac <= 0.0)
    throw std::domain_error("outage_exponent: GBS has zero bandwidth (rho = 1)");
  const double x = kPi * r_I * r_I * p.lambda * nu / frac;
  if (x > 1020.0) return std::numeric_limits<double>::infinity();
  return (std::exp2(x) - 1.0) * 2.0 * frac * radial_moment(r_I, p) /
         (phy::kappa0(p) * p.P_G * r_I * r_I);
}

double gbs_outage(const DesignVars& vars, double nu, const phy::SystemParams& p) {
  const double f = outage_exponent(vars.scheme, vars.rho, vars.r_I, nu, p);
  if (f > 700.0) return 1.0;
  return -std::expm1(-f);
}

double gbs_max_throughput(Scheme scheme, double rho, double r_I,
                          const phy::SystemParams& p) {
  if (r_I <= 0.0) throw std::domain_error("gbs_max_throughput: r_I must be > 0");
  const double frac = scheme == Scheme::Orthogonal ? 1.0 - rho : 1.0;
  if (frac <= 0.0) return 0.0;
  const double f_cap = -std::log1p(-p.P_out_max);
  const double arg = f_cap * phy::kappa0(p) * p.P_G * r_I * r_I /
                     (2.0 * frac * radial_moment(r_I, p));
  return frac * std::log2(1.0 + arg) / (kPi * r_I * r_I * p.lambda);
}

double gbs_only_throughput_closed_form(const phy::SystemParams& p) {
  return gbs_max_throughput(Scheme::GbsOnly, 0.0, p.r_G, p);
}

double gbs_only_throughput(const phy::SystemParams& p) {
  const double f_cap = -std::log1p(-p.P_out_max);
  auto f = [&](double nu) {
    return outage_exponent(Scheme::GbsOnly, 0.0, p.r_G, nu, p);
  };
  double hi = 2.0 * gbs_only_throughput_closed_form(p);
  while (f(hi) < f_cap) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < f_cap ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace uavcell::analytic
