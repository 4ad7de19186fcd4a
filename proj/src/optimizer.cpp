#include "uavcell/optimizer.hpp"

#include "uavcell/geometry.hpp"
#include "uavcell/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavcell::optimizer {

using analytic::DesignVars;
using analytic::Scheme;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRhoCeiling = 1.0 - 1e-12;
} // namespace

void SolverSettings::validate() const {
  if (!(nu_tol > 0 && rho_tol > 0))
    throw std::invalid_argument("SolverSettings: tolerances must be > 0");
  if (r_I_grid < 3)
    throw std::invalid_argument("SolverSettings: r_I_grid must be >= 3");
}

namespace {

// Minimum rho in (0,1) with R_U^max(rho, r_I) >= nu; NaN when even the
// whole band cannot reach nu. R_U^max increases in rho, so bisection.
double min_rho_for(double nu, double r_I, const phy::SystemParams& p,
                   const SolverSettings& s) {
  if (nu <= 0.0) return 0.0;
  if (analytic::uav_max_throughput(Scheme::Orthogonal, kRhoCeiling, r_I, p) < nu)
    return std::numeric_limits<double>::quiet_NaN();
  double lo = 0.0, hi = kRhoCeiling;
  while (hi - lo > s.rho_tol) {
    const double mid = 0.5 * (lo + hi);
    (analytic::uav_max_throughput(Scheme::Orthogonal, mid, r_I, p) >= nu ? hi
                                                                         : lo) = mid;
  }
  return hi;
}

struct GridBest {
  double f = kInf;
  double rho = 0.0;
  double r_I = 0.0;
};

// Outage exponent at the minimum feasible rho for this r_I; +inf when the
// UAV side cannot reach nu here.
double exponent_at(double nu, double r_I, const phy::SystemParams& p,
                   const SolverSettings& s, double* rho_out) {
  const double rho = min_rho_for(nu, r_I, p, s);
  if (std::isnan(rho)) return kInf;
  if (rho_out) *rho_out = rho;
  return analytic::outage_exponent(Scheme::Orthogonal, rho, r_I, nu, p);
}

// min_f over the r_I line: uniform grid, then golden-section refinement
// around the best cell (f is not proven unimodal in r_I; the grid is the
// correctness backstop).
GridBest minimize_exponent(double nu, const phy::SystemParams& p,
                           const SolverSettings& s) {
  const int g = s.r_I_grid;
  const double step = p.r_G / (g + 1);
  GridBest best;
  int best_i = -1;
  for (int i = 1; i <= g; ++i) {
    const double r_I = step * i;
    double rho = 0.0;
    const double f = exponent_at(nu, r_I, p, s, &rho);
    if (f < best.f) {
      best = {f, rho, r_I};
      best_i = i;
    }
  }
  if (best_i < 0 || !s.r_I_refine) return best;

  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = step * std::max(1, best_i - 1);
  double b = std::min(step * (best_i + 1), p.r_G * (1.0 - 1e-9));
  double x1 = b - golden * (b - a);
  double x2 = a + golden * (b - a);
  double f1 = exponent_at(nu, x1, p, s, nullptr);
  double f2 = exponent_at(nu, x2, p, s, nullptr);
  for (int it = 0; it < 60 && b - a > 1e-7 * p.r_G; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - golden * (b - a);
      f1 = exponent_at(nu, x1, p, s, nullptr);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (b - a);
      f2 = exponent_at(nu, x2, p, s, nullptr);
    }
  }
  const double r_mid = 0.5 * (a + b);
  double rho = 0.0;
  const double f_mid = exponent_at(nu, r_mid, p, s, &rho);
  if (f_mid < best.f) best = {f_mid, rho, r_mid};
  return best;
}

} // namespace

Solution solve_orthogonal(const phy::SystemParams& p, const SolverSettings& s) {
  p.validate();
  s.validate();
  const double f_cap = -std::log1p(-p.P_out_max);

  auto probe = [&](double nu) { return minimize_exponent(nu, p, s); };
  auto feasible = [&](const GridBest& b) { return b.f <= f_cap; };

  Solution sol;
  int iter = 0;

  // Upper bracket by doubling from the GBS-only throughput.
  double lo = 0.0;
  GridBest at_lo;
  double hi = std::max(analytic::gbs_only_throughput(p), 1e-9);
  GridBest b = probe(hi);
  if (feasible(b)) {
    for (int k = 0; k < 80 && feasible(b); ++k) {
      lo = hi;
      at_lo = b;
      hi *= 2.0;
      b = probe(hi);
      sol.trace.push_back({iter++, lo, hi, feasible(b)});
    }
  }
  // nu = 0 is always feasible (outage exponent 0 <= f_cap for P_out_max > 0).

  // The relative stopping rule cannot fire if lo stays pinned at 0, so cap
  // the bisection; 500 halvings is far beyond any representable interval.
  int halvings = 0;
  while (hi - lo > s.nu_tol * hi && halvings++ < 500) {
    const double mid = 0.5 * (lo + hi);
    b = probe(mid);
    if (feasible(b)) {
      lo = mid;
      at_lo = b;
    } else {
      hi = mid;
    }
    sol.trace.push_back({iter++, lo, hi, feasible(b)});
  }
  if (lo == 0.0) at_lo = probe(0.0);

  const auto opt = geometry::optimal_radius({at_lo.r_I, p.r_G, p.psi});
  sol.vars = {Scheme::Orthogonal, at_lo.rho, at_lo.r_I, opt.r_U};
  sol.clamped = opt.clamped;
  sol.report.nu_bar = lo;
  sol.report.theta = p.lambda * lo;
  sol.report.R_U_bar =
      analytic::uav_max_throughput(Scheme::Orthogonal, at_lo.rho, at_lo.r_I, p);
  sol.report.R_G_bar =
      analytic::gbs_max_throughput(Scheme::Orthogonal, at_lo.rho, at_lo.r_I, p);
  sol.report.p_out = analytic::gbs_outage(sol.vars, lo, p);
  sol.converged = true;
  return sol;
}

Solution solve_reuse(const phy::SystemParams& p, const SolverSettings& s) {
  p.validate();
  s.validate();

  auto nu_uav = [&](double r_I) {
    return analytic::uav_max_throughput(Scheme::Reuse, 1.0, r_I, p);
  };
  auto nu_gbs = [&](double r_I) {
    return analytic::gbs_max_throughput(Scheme::Reuse, 0.0, r_I, p);
  };
  auto gap = [&](double r_I) { return nu_uav(r_I) - nu_gbs(r_I); };

  const double step = p.r_G / (s.r_I_grid + 1);
  double a = step;
  double b = p.r_G * (1.0 - 1e-9);

  Solution sol;
  double r_opt;
  if (!s.r_I_refine) {
    // Plain grid scan of the max-min.
    r_opt = a;
    double best = -kInf;
    for (int i = 1; i <= s.r_I_grid; ++i) {
      const double r_I = step * i;
      const double v = std::min(nu_uav(r_I), nu_gbs(r_I));
      if (v > best) {
        best = v;
        r_opt = r_I;
      }
    }
  } else if (gap(a) > 0.0) {
    // UAV side dominates everywhere; the decreasing GBS side caps the
    // max-min at the inner boundary.
    sol.boundary = true;
    r_opt = a;
  } else if (gap(b) < 0.0) {
    sol.boundary = true;
    r_opt = b;
  } else {
    int iter = 0;
    const double tol = std::max(s.rho_tol * p.r_G, 1e-9 * p.r_G);
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      (gap(mid) < 0.0 ? a : b) = mid;
      sol.trace.push_back({iter++, a, b, true});
    }
    r_opt = 0.5 * (a + b);
  }

  const auto opt = geometry::optimal_radius({r_opt, p.r_G, p.psi});
  const double nu = std::min(nu_uav(r_opt), nu_gbs(r_opt));
  sol.vars = {Scheme::Reuse, 1.0, r_opt, opt.r_U};
  sol.clamped = opt.clamped;
  sol.report.nu_bar = nu;
  sol.report.theta = p.lambda * nu;
  sol.report.R_U_bar = nu_uav(r_opt);
  sol.report.R_G_bar = nu_gbs(r_opt);
  sol.report.p_out = analytic::gbs_outage(sol.vars, nu, p);
  sol.converged = true;
  return sol;
}

Solution solve_gbs_only(const phy::SystemParams& p) {
  p.validate();
  phy::SystemParams q = p;
  q.P_G = p.P_G + p.P_U; // UAV power budget folded into the GBS
  const double nu = analytic::gbs_only_throughput(q);

  Solution sol;
  sol.vars = {Scheme::GbsOnly, 0.0, p.r_G, p.r_G};
  sol.report.nu_bar = nu;
  sol.report.theta = p.lambda * nu;
  sol.report.R_U_bar = 0.0;
  sol.report.R_G_bar = nu;
  sol.report.p_out = analytic::gbs_outage(sol.vars, nu, q);
  sol.converged = true;
  return sol;
}

double max_density(Scheme scheme, const phy::SystemParams& p, double nu_min_bps,
                   const SolverSettings& s) {
  if (nu_min_bps <= 0.0)
    throw std::invalid_argument("max_density: nu_min must be > 0");
  auto nu_at = [&](double lambda) {
    phy::SystemParams q = p;
    q.lambda = lambda;
    switch (scheme) {
      case Scheme::Orthogonal: return solve_orthogonal(q, s).report.nu_bar;
      case Scheme::Reuse: return solve_reuse(q, s).report.nu_bar;
      case Scheme::GbsOnly: return solve_gbs_only(q).report.nu_bar;
    }
    return 0.0;
  };
  auto meets = [&](double lambda) { return nu_at(lambda) * p.W >= nu_min_bps; };

  double lo = 1e-9;
  if (!meets(lo))
    throw std::runtime_error("max_density: target rate unreachable even as lambda -> 0");
  double hi = lo;
  int k = 0;
  do {
    lo = hi;
    hi *= 2.0;
  } while (meets(hi) && ++k < 80);
  if (k >= 80) throw std::runtime_error("max_density: no finite bracket");

  while (hi - lo > 1e-3 * hi) {
    const double mid = 0.5 * (lo + hi);
    (meets(mid) ? lo : hi) = mid;
  }
  return lo;
}

} // namespace uavcell::optimizer
