#include "uavcell/microcell.hpp"

#include "uavcell/units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavcell::microcell {

using units::kPi;

void MicroLayout::validate(const phy::SystemParams& p) const {
  if (M < 1) throw std::invalid_argument("MicroLayout: M must be >= 1");
  if (!(d_micro > 0.0 && d_micro <= p.r_G))
    throw std::invalid_argument("MicroLayout: d_micro must be in (0, r_G]");
  if (!(r_micro >= 0.0))
    throw std::invalid_argument("MicroLayout: r_micro must be >= 0");
  if (!(rho_micro > 0.0 && rho_micro < 1.0))
    throw std::invalid_argument("MicroLayout: rho_micro must be in (0, 1)");
  if (!(H_micro > 0.0 && G_micro > 0.0 && P_micro > 0.0))
    throw std::invalid_argument(
        "MicroLayout: H_micro, G_micro, P_micro must be > 0");
}

Assignment assign_users(const montecarlo::UserField& field,
                        const MicroLayout& layout) {
  const std::size_t K = field.size();
  Assignment a;
  a.bs.assign(K, -1);
  a.dist2.assign(K, 0.0);
  std::vector<double> bx(layout.M), by(layout.M);
  for (int m = 0; m < layout.M; ++m) {
    const double ang = 2.0 * kPi * m / layout.M;
    bx[m] = layout.d_micro * std::cos(ang);
    by[m] = layout.d_micro * std::sin(ang);
  }
  const double cover2 = layout.r_micro * layout.r_micro;
  for (std::size_t k = 0; k < K; ++k) {
    const double x = field.r[k] * std::cos(field.phi[k]);
    const double y = field.r[k] * std::sin(field.phi[k]);
    int best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int m = 0; m < layout.M; ++m) {
      const double dx = x - bx[m], dy = y - by[m];
      const double d2 = dx * dx + dy * dy;
      if (d2 < best_d2) { // strict: ties keep the lower index
        best_d2 = d2;
        best = m;
      }
    }
    if (best >= 0 && best_d2 <= cover2) {
      a.bs[k] = best;
      a.dist2[k] = best_d2;
    }
  }
  return a;
}

namespace {

// Geometry-dependent sufficient statistics of one realization: per-BS user
// counts and path-loss sums. Independent of rho_micro, so the exhaustive
// search can reuse them across the rho grid.
struct TierStats {
  std::vector<long> micro_K;      // users per micro BS
  std::vector<double> micro_pl;   // sum (H_micro^2 + d^2)^(n/2) per BS
  long gbs_K = 0;
  double gbs_pl = 0.0; // sum (H_G^2 + r^2)^(n/2)
};

TierStats tier_stats(const montecarlo::UserField& field, const Assignment& a,
                     const MicroLayout& layout, const phy::SystemParams& p) {
  TierStats s;
  s.micro_K.assign(layout.M, 0);
  s.micro_pl.assign(layout.M, 0.0);
  const double h2 = layout.H_micro * layout.H_micro;
  for (std::size_t k = 0; k < field.size(); ++k) {
    if (a.bs[k] >= 0) {
      ++s.micro_K[a.bs[k]];
      s.micro_pl[a.bs[k]] += std::pow(h2 + a.dist2[k], p.n / 2.0);
    } else {
      ++s.gbs_K;
      s.gbs_pl += std::pow(p.H_G * p.H_G + field.r[k] * field.r[k], p.n / 2.0);
    }
  }
  return s;
}

// min(nu_G, nu_micro) at the outage-capped rate b*log2(1 + gamma*F), with
// F the exact Exp(1) quantile at P_out_max. nu_micro is the user-weighted
// average over the occupied micro BSs; an empty tier is unconstraining.
double realization_nu(const TierStats& s, const MicroLayout& layout,
                      const phy::SystemParams& p) {
  const double F = -std::log1p(-p.P_out_max);
  const double kap_m = phy::ref_gain(p) * layout.G_micro / phy::noise_power(p);
  constexpr double inf = std::numeric_limits<double>::infinity();

  double micro_sum = 0.0;
  long micro_users = 0;
  for (int m = 0; m < layout.M; ++m) {
    const long Km = s.micro_K[m];
    if (Km == 0) continue;
    const double b = layout.rho_micro / layout.M / Km;
    const double gamma = kap_m * (layout.P_micro / layout.M) / (b * s.micro_pl[m]);
    micro_sum += Km * b * std::log2(1.0 + gamma * F);
    micro_users += Km;
  }
  const double nu_micro = micro_users > 0 ? micro_sum / micro_users : inf;

  double nu_G = inf;
  if (s.gbs_K > 0) {
    const double b = (1.0 - layout.rho_micro) / s.gbs_K;
    const double gamma = phy::kappa0(p) * p.P_G / (b * s.gbs_pl);
    nu_G = b * std::log2(1.0 + gamma * F);
  }
  return std::min(nu_G, nu_micro);
}

LayoutReport report_from(const std::vector<TierStats>& stats,
                         const MicroLayout& layout,
                         const phy::SystemParams& p) {
  LayoutReport rep;
  rep.per_realization.reserve(stats.size());
  double sum = 0.0;
  for (const auto& s : stats) {
    const double nu = realization_nu(s, layout, p);
    rep.per_realization.push_back(nu);
    sum += nu;
  }
  rep.nu_bar = stats.empty() ? 0.0 : sum / stats.size();
  rep.theta = p.lambda * rep.nu_bar;
  return rep;
}

} // namespace

LayoutReport evaluate_layout(std::span<const montecarlo::UserField> fields,
                             const MicroLayout& layout,
                             const phy::SystemParams& p) {
  layout.validate(p);
  p.validate();
  if (fields.empty())
    throw std::invalid_argument("evaluate_layout: no realizations given");
  std::vector<TierStats> stats;
  stats.reserve(fields.size());
  for (const auto& f : fields)
    stats.push_back(tier_stats(f, assign_users(f, layout), layout, p));
  return report_from(stats, layout, p);
}

SearchGrids default_grids(double r_G) {
  SearchGrids g;
  for (int i = 10; i <= 19; ++i) g.d_micro.push_back(0.05 * i * r_G);
  for (int i = 1; i <= 10; ++i) g.r_micro.push_back(50.0 * i);
  for (int i = 1; i <= 19; ++i) g.rho_micro.push_back(0.05 * i);
  return g;
}

OptimizeResult optimize_layout(int M,
                               std::span<const montecarlo::UserField> fields,
                               const phy::SystemParams& p,
                               const SearchGrids& grids) {
  if (grids.d_micro.empty() || grids.r_micro.empty() || grids.rho_micro.empty())
    throw std::invalid_argument("optimize_layout: empty search grid");
  if (fields.empty())
    throw std::invalid_argument("optimize_layout: no realizations given");

  OptimizeResult best;
  best.report.nu_bar = -std::numeric_limits<double>::infinity();
  std::vector<TierStats> stats(fields.size());
  for (double d : grids.d_micro) {
    for (double r : grids.r_micro) {
      MicroLayout lay;
      lay.M = M;
      lay.d_micro = d;
      lay.r_micro = r;
      // Stats don't depend on rho_micro; compute once per (d, r).
      for (std::size_t i = 0; i < fields.size(); ++i)
        stats[i] = tier_stats(fields[i], assign_users(fields[i], lay), lay, p);
      for (double rho : grids.rho_micro) {
        lay.rho_micro = rho;
        LayoutReport rep = report_from(stats, lay, p);
        if (rep.nu_bar > best.report.nu_bar) {
          best.layout = lay;
          best.report = std::move(rep);
        }
      }
    }
  }
  return best;
}

} // namespace uavcell::microcell
