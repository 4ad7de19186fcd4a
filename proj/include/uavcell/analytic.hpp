#ifndef UAVCELL_ANALYTIC_HPP
#define UAVCELL_ANALYTIC_HPP

#include "uavcell/geometry.hpp"
#include "uavcell/phy.hpp"

#include <string>

namespace uavcell::analytic {

enum class Scheme { Orthogonal, Reuse, GbsOnly };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Decision variables. rho is the bandwidth fraction given to the UAV and
/// is meaningful only for Orthogonal; Reuse uses the whole band on both
/// sides, GbsOnly forces rho = 0 and r_I = r_G.
struct DesignVars {
  Scheme scheme = Scheme::Orthogonal;
  double rho = 0.5;
  double r_I = 500.0;
  double r_U = 0.0;

  void validate(const phy::SystemParams& p) const;
  geometry::RingSegment segment(const phy::SystemParams& p) const {
    return {r_I, p.r_G, p.psi};
  }
  /// Bandwidth fraction the UAV transmits in: rho, or 1 under Reuse.
  double uav_band_fraction() const;
  /// Bandwidth fraction left to the GBS: 1-rho, or 1 under Reuse/GbsOnly.
  double gbs_band_fraction() const;
};

struct ThroughputReport {
  double nu_bar = 0;   // common throughput, bps/Hz (normalized to W)
  double theta = 0;    // spatial throughput lambda*nu_bar, bps/Hz/m^2
  double R_U_bar = 0;  // UAV-side common throughput, bps/Hz
  double R_G_bar = 0;  // GBS-side common throughput, bps/Hz
  double p_out = 0;    // GBS outage probability at nu_bar
};

struct BandwidthTerms {
  double b_G;   // normalized per-user GBS bandwidth
  double b_min; // worst-case normalized per-user UAV bandwidth
};

/// b_G = (1-rho)/(lambda*pi*r_I^2), b_min = 2*rho/(mu*lambda*(r_G^2-r_I^2)*psi).
/// Throws std::domain_error when a side has no users (r_I = 0 or r_I = r_G).
BandwidthTerms bandwidth_terms(const DesignVars& vars, const phy::SystemParams& p);

/// L(r_I) = ((H_G^2+r_I^2)^((2+n)/2) - H_G^(2+n)) / (2+n), the radial
/// moment of the inverted path loss over the served disk.
double radial_moment(double r_I, const phy::SystemParams& p);

/// Lower-bound common throughput of UAV-served users at the given design
/// point (worst-case distance at vars.r_U, peak crowding mu).
double uav_common_throughput(const DesignVars& vars, const phy::SystemParams& p);

/// Same quantity through the pre-cancellation route
/// (psi/2pi)*b_min*log2(1+SNR): the association-time factor and the
/// per-user bandwidth's psi dependence cancel.
double uav_common_throughput_timeavg(const DesignVars& vars, const phy::SystemParams& p);

/// UAV common throughput with r_U at the geometric optimum for this r_I.
/// Increasing in rho and in r_I.
double uav_max_throughput(Scheme scheme, double rho, double r_I,
                          const phy::SystemParams& p);

/// Common average receive SNR under slow channel inversion.
double gbs_avg_snr(const DesignVars& vars, const phy::SystemParams& p);

/// Transmit power spent on a user at radius r; integrates to exactly P_G
/// over the served region.
double gbs_power_profile(double r, const DesignVars& vars, const phy::SystemParams& p);

/// Outage exponent f(rho, r_I, nu); P_out = 1 - exp(-f). Increasing in
/// each argument. Returns +inf on 2^x overflow (P_out saturates at 1).
double outage_exponent(Scheme scheme, double rho, double r_I, double nu,
                       const phy::SystemParams& p);

/// GBS outage probability at target common throughput nu.
double gbs_outage(const DesignVars& vars, double nu, const phy::SystemParams& p);

/// Largest nu with outage exactly at the cap, closed form.
double gbs_max_throughput(Scheme scheme, double rho, double r_I,
                          const phy::SystemParams& p);

/// GBS-only baseline (rho = 0, r_I = r_G): unique nu with outage = cap,
/// by bisection to 1e-10 relative.
double gbs_only_throughput(const phy::SystemParams& p);

/// Closed-form inversion of the same equation; cross-check route.
double gbs_only_throughput_closed_form(const phy::SystemParams& p);

} // namespace uavcell::analytic

#endif
