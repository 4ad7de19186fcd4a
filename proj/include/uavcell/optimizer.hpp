#ifndef UAVCELL_OPTIMIZER_HPP
#define UAVCELL_OPTIMIZER_HPP

#include "uavcell/analytic.hpp"

#include <vector>

namespace uavcell::optimizer {

struct SolverSettings {
  double nu_tol = 1e-6;  // relative bisection tolerance on nu
  double rho_tol = 1e-9; // absolute tolerance on rho
  int r_I_grid = 2001;   // line-search points for r_I
  bool r_I_refine = true; // refinement beyond the grid

  void validate() const;
};

struct TraceRecord {
  int iteration;
  double lo;
  double hi;
  bool feasible; // whether the probed point was feasible
};

struct Solution {
  analytic::DesignVars vars;
  analytic::ThroughputReport report;
  std::vector<TraceRecord> trace;
  bool converged = false;
  bool boundary = false; // reuse: no interior crossing, boundary point returned
  bool clamped = false;  // geometric r_U optimum was clamped into [r_I, r_G]
};

/// Max-min common throughput under orthogonal spectrum sharing: outer
/// bisection on nu, inner feasibility via minimum-rho bisection per r_I
/// grid point plus golden-section refinement of the outage exponent.
Solution solve_orthogonal(const phy::SystemParams& p, const SolverSettings& s);

/// Spectrum reuse: root-find the crossing of the increasing UAV-side and
/// decreasing GBS-side max throughputs over r_I.
Solution solve_reuse(const phy::SystemParams& p, const SolverSettings& s);

/// GBS-only baseline with the UAV power budget added to the GBS.
Solution solve_gbs_only(const phy::SystemParams& p);

/// Largest user density such that the scheme's common throughput (in bps,
/// i.e. nu*W) still meets nu_min_bps. Throws std::runtime_error when the
/// target is unreachable even as lambda -> 0.
double max_density(analytic::Scheme scheme, const phy::SystemParams& p,
                   double nu_min_bps, const SolverSettings& s);

} // namespace uavcell::optimizer

#endif
