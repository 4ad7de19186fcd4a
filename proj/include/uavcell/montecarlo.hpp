#ifndef UAVCELL_MONTECARLO_HPP
#define UAVCELL_MONTECARLO_HPP

#include "uavcell/analytic.hpp"
#include "uavcell/geometry.hpp"
#include "uavcell/phy.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace uavcell::montecarlo {

/// One HPPP realization of user positions on the cell disk, polar coords.
struct UserField {
  std::vector<double> r;
  std::vector<double> phi;
  std::uint64_t seed = 0;
  double lambda = 0.0;

  std::size_t size() const { return r.size(); }
};

/// Count ~ Poisson(lambda*pi*r_G^2), radius via sqrt scaling, angle uniform.
UserField generate_field(double lambda, double r_G, std::uint64_t seed);

/// Documented seed-splitting rule (splitmix64 over master ^ index); one
/// independent stream per realization.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct Schedule {
  double V = 30.0; // UAV speed, m/s
  int ticks = 720; // angular samples per period (0.5 deg steps)

  double period(double r_U) const;
};

struct MuEstimate {
  double mu = 1.0;
  int fields_used = 0;
  int fields_excluded = 0; // fields with an empty ring region
  std::vector<double> per_field;
};

/// Peak-to-mean crowding of the rotating association segment, averaged
/// over fields. Fields whose ring region is empty are excluded (psi too
/// small / density too low for the association rule to make sense).
MuEstimate estimate_mu(std::span<const UserField> fields,
                       const geometry::RingSegment& seg, double lambda,
                       int ticks);

enum class UavRatePolicy { Bound, Adaptive };

struct RealizationResult {
  double uav_throughput_bound = 0.0;    // per-user average, constant-rate policy
  double uav_throughput_adaptive = 0.0; // per-user average, true per-tick rates
  double gbs_throughput = 0.0;          // per-user average at fixed target rate
  double gbs_outage = 0.0;              // fraction of outage draws
  double assoc_fraction = 0.0;          // mean associated fraction of the period
  double max_assoc_error_ticks = 0.0;   // worst |window - psi*T/2pi| in ticks
  std::size_t uav_users = 0;
  std::size_t gbs_users = 0;
  int empty_ticks = 0;      // ticks with no user in the segment
  bool coverage_ok = true;  // every scheduled user within d_max
  bool overlap_free = true; // reuse: segment and GBS sector disjoint
};

/// Simulates one UAV period of cyclical access for a single realization.
/// nu_target is the GBS-side common-throughput target the fixed-rate
/// transmission and the outage events are measured against. unit_fading
/// freezes the Rayleigh term at its mean (control runs).
RealizationResult simulate_realization(const UserField& field,
                                       const analytic::DesignVars& vars,
                                       const phy::SystemParams& p,
                                       const Schedule& sched, double nu_target,
                                       std::uint64_t fading_seed,
                                       bool unit_fading = false);

struct SimSettings {
  int realizations = 100;
  int ticks = 720;
  double speed = 30.0;
  std::uint64_t seed = 1;
  int threads = 1;
  bool estimate_mu = true; // overwrite params.mu with the field estimate
};

struct SimSummary {
  MuEstimate mu;
  double nu_target = 0.0;     // GBS-side analytic target used in the runs
  double theta_U_bound = 0.0; // lambda * mean per-user UAV throughput
  double theta_U_adaptive = 0.0;
  double theta_G = 0.0;
  double se_theta_U_bound = 0.0; // standard errors over realizations
  double se_theta_U_adaptive = 0.0;
  double se_theta_G = 0.0;
  double gbs_outage = 0.0;
  double se_gbs_outage = 0.0;
  double theta_U_analytic = 0.0; // with the estimated mu
  double theta_G_analytic = 0.0;
  bool coverage_ok = true;
  bool overlap_free = true;
  std::vector<RealizationResult> realizations;
};

/// Generates fields, estimates mu, simulates every realization (optionally
/// in parallel; aggregation order is fixed so results are independent of
/// the thread count), and aggregates with compensated sums.
SimSummary run_simulation(const analytic::DesignVars& vars,
                          const phy::SystemParams& p, const SimSettings& s);

} // namespace uavcell::montecarlo

#endif
