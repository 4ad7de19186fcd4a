#include "uavcell/montecarlo.hpp"

#include "uavcell/units.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace uavcell::montecarlo {

using units::kPi;

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

UserField generate_field(double lambda, double r_G, std::uint64_t seed) {
  if (lambda <= 0.0) throw std::invalid_argument("generate_field: lambda must be > 0");
  std::mt19937_64 rng(seed);
  std::poisson_distribution<long> count_dist(lambda * kPi * r_G * r_G);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const long count = count_dist(rng);
  UserField f;
  f.seed = seed;
  f.lambda = lambda;
  f.r.reserve(count);
  f.phi.reserve(count);
  for (long i = 0; i < count; ++i) {
    f.r.push_back(r_G * std::sqrt(unif(rng)));
    f.phi.push_back(2.0 * kPi * unif(rng));
  }
  return f;
}

double Schedule::period(double r_U) const { return 2.0 * kPi * r_U / V; }

namespace {

// Signed angular difference wrapped into (-pi, pi].
double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a - kPi;
}

struct KahanSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

} // namespace

MuEstimate estimate_mu(std::span<const UserField> fields,
                       const geometry::RingSegment& seg, double lambda,
                       int ticks) {
  seg.validate();
  if (ticks < 1) throw std::invalid_argument("estimate_mu: ticks must be >= 1");
  const double K_a = seg.expected_count(lambda);
  MuEstimate est;
  KahanSum acc;
  for (const auto& f : fields) {
    std::vector<double> ring_phi;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (f.r[k] >= seg.r_I && f.r[k] <= seg.r_G) ring_phi.push_back(f.phi[k]);
    if (ring_phi.empty()) {
      ++est.fields_excluded;
      continue;
    }
    long k_max = 0;
    for (int t = 0; t < ticks; ++t) {
      const double a = 2.0 * kPi * t / ticks;
      long m = 0;
      for (double ph : ring_phi)
        if (std::abs(wrap_angle(ph - a)) <= seg.psi / 2.0) ++m;
      if (m > k_max) k_max = m;
    }
    const double mu_f = static_cast<double>(k_max) / K_a;
    est.per_field.push_back(mu_f);
    acc.add(mu_f);
    ++est.fields_used;
  }
  if (est.fields_used == 0)
    throw std::runtime_error("estimate_mu: every field had an empty ring region");
  est.mu = acc.sum / est.fields_used;
  return est;
}

RealizationResult simulate_realization(const UserField& field,
                                       const analytic::DesignVars& vars,
                                       const phy::SystemParams& p,
                                       const Schedule& sched, double nu_target,
                                       std::uint64_t fading_seed,
                                       bool unit_fading) {
  vars.validate(p);
  RealizationResult res;
  const int ticks = sched.ticks;
  const std::size_t K = field.size();
  const bool has_uav = vars.scheme != analytic::Scheme::GbsOnly &&
                       vars.uav_band_fraction() > 0.0;
  const bool reuse = vars.scheme == analytic::Scheme::Reuse;

  std::mt19937_64 rng(fading_seed);
  std::exponential_distribution<double> exp1(1.0);
  auto fading = [&]() { return unit_fading ? 1.0 : exp1(rng); };

  // ---- UAV side -------------------------------------------------------
  std::vector<std::size_t> uav_idx;
  std::vector<int> assoc_ticks;
  std::vector<double> adaptive_sum;
  double rate_bound = 0.0;
  double d_max = 0.0, beam_gain = 0.0;
  if (has_uav) {
    const auto seg = vars.segment(p);
    d_max = geometry::worst_case_distance(vars.r_U, seg);
    beam_gain = phy::uav_beam_gain(d_max, p.H_U);
    const double rho = vars.uav_band_fraction();
    const double b_min = analytic::bandwidth_terms(vars, p).b_min;
    rate_bound = b_min * std::log2(1.0 + phy::eta0(p) * p.P_U * beam_gain /
                                             (rho * (d_max * d_max + p.H_U * p.H_U)));
    for (std::size_t k = 0; k < K; ++k)
      if (field.r[k] >= vars.r_I) uav_idx.push_back(k);
    assoc_ticks.assign(uav_idx.size(), 0);
    adaptive_sum.assign(uav_idx.size(), 0.0);
  }

  // ---- GBS side -------------------------------------------------------
  std::vector<std::size_t> gbs_idx;
  std::vector<double> gbs_pl; // (H_G^2 + r^2)^(n/2), aligned with gbs_idx
  for (std::size_t k = 0; k < K; ++k)
    if (field.r[k] < vars.r_I || vars.scheme == analytic::Scheme::GbsOnly) {
      gbs_idx.push_back(k);
      gbs_pl.push_back(std::pow(p.H_G * p.H_G + field.r[k] * field.r[k], p.n / 2.0));
    }
  std::vector<double> gbs_ok_ticks(gbs_idx.size(), 0.0);
  std::vector<int> gbs_draws(gbs_idx.size(), 0);
  long outage_draws = 0, total_draws = 0;

  // Static per-user share for the non-sectorized GBS modes.
  double gbs_b = 0.0, gbs_thr = 0.0; // threshold on the fading draw
  if (!reuse && !gbs_idx.empty()) {
    const double frac = vars.gbs_band_fraction();
    gbs_b = frac / static_cast<double>(gbs_idx.size());
    double pl_sum = 0.0;
    for (double v : gbs_pl) pl_sum += v;
    const double gamma = phy::kappa0(p) * p.P_G / (gbs_b * pl_sum);
    gbs_thr = frac > 0.0 ? (std::exp2(nu_target / gbs_b) - 1.0) / gamma
                         : std::numeric_limits<double>::infinity();
  }
  const double nu_sector = reuse ? 2.0 * kPi * nu_target / p.Phi_G : 0.0;

  std::vector<std::size_t> members;
  std::vector<std::size_t> sector;
  for (int t = 0; t < ticks; ++t) {
    const double a = 2.0 * kPi * t / ticks;

    if (has_uav) {
      members.clear();
      for (std::size_t i = 0; i < uav_idx.size(); ++i)
        if (std::abs(wrap_angle(field.phi[uav_idx[i]] - a)) <= p.psi / 2.0)
          members.push_back(i);
      if (members.empty()) {
        ++res.empty_ticks;
      } else {
        const double rho = vars.uav_band_fraction();
        const double share = rho / static_cast<double>(members.size());
        for (std::size_t i : members) {
          const std::size_t k = uav_idx[i];
          const double d2 = field.r[k] * field.r[k] + vars.r_U * vars.r_U -
                            2.0 * field.r[k] * vars.r_U *
                                std::cos(field.phi[k] - a);
          if (d2 > d_max * d_max * (1.0 + 1e-9)) res.coverage_ok = false;
          ++assoc_ticks[i];
          adaptive_sum[i] += share * std::log2(1.0 + phy::eta0(p) * beam_gain *
                                                         p.P_U /
                                                         (rho * (d2 + p.H_U * p.H_U)));
        }
      }
    }

    if (reuse && !gbs_idx.empty()) {
      // GBS sector diametrically opposite the UAV's current angle.
      sector.clear();
      double pl_sum = 0.0;
      for (std::size_t i = 0; i < gbs_idx.size(); ++i) {
        if (std::abs(wrap_angle(field.phi[gbs_idx[i]] - (a + kPi))) <=
            p.Phi_G / 2.0) {
          sector.push_back(i);
          pl_sum += gbs_pl[i];
        }
      }
      if (has_uav) {
        // Segment and sector must stay angularly disjoint.
        for (std::size_t i : sector)
          if (std::abs(wrap_angle(field.phi[gbs_idx[i]] - a)) <= p.psi / 2.0 &&
              field.r[gbs_idx[i]] >= vars.r_I)
            res.overlap_free = false;
      }
      if (!sector.empty()) {
        const double b_t = 1.0 / static_cast<double>(sector.size());
        const double gamma_t = phy::kappa0(p) * p.P_G / (b_t * pl_sum);
        const double thr = (std::exp2(nu_sector / b_t) - 1.0) / gamma_t;
        for (std::size_t i : sector) {
          const double zeta = fading();
          ++gbs_draws[i];
          ++total_draws;
          if (zeta >= thr)
            gbs_ok_ticks[i] += 1.0;
          else
            ++outage_draws;
        }
      }
    } else if (!reuse && !gbs_idx.empty() && gbs_b > 0.0) {
      for (std::size_t i = 0; i < gbs_idx.size(); ++i) {
        const double zeta = fading();
        ++gbs_draws[i];
        ++total_draws;
        if (zeta >= gbs_thr)
          gbs_ok_ticks[i] += 1.0;
        else
          ++outage_draws;
      }
    }
  }

  // ---- Per-user averages ----------------------------------------------
  if (has_uav && !uav_idx.empty()) {
    KahanSum bound, adaptive, assoc;
    const double window = p.psi / (2.0 * kPi) * ticks;
    for (std::size_t i = 0; i < uav_idx.size(); ++i) {
      bound.add(rate_bound * assoc_ticks[i] / ticks);
      adaptive.add(adaptive_sum[i] / ticks);
      assoc.add(static_cast<double>(assoc_ticks[i]) / ticks);
      res.max_assoc_error_ticks =
          std::max(res.max_assoc_error_ticks, std::abs(assoc_ticks[i] - window));
    }
    res.uav_throughput_bound = bound.sum / uav_idx.size();
    res.uav_throughput_adaptive = adaptive.sum / uav_idx.size();
    res.assoc_fraction = assoc.sum / uav_idx.size();
  }
  if (!gbs_idx.empty()) {
    KahanSum acc;
    const double per_tick_rate = reuse ? nu_sector : nu_target;
    for (std::size_t i = 0; i < gbs_idx.size(); ++i)
      acc.add(per_tick_rate * gbs_ok_ticks[i] / ticks);
    res.gbs_throughput = acc.sum / gbs_idx.size();
    res.gbs_outage = total_draws > 0
                         ? static_cast<double>(outage_draws) / total_draws
                         : 0.0;
  }
  res.uav_users = uav_idx.size();
  res.gbs_users = gbs_idx.size();
  return res;
}

SimSummary run_simulation(const analytic::DesignVars& vars,
                          const phy::SystemParams& p, const SimSettings& s) {
  if (s.realizations < 1)
    throw std::invalid_argument("run_simulation: realizations must be >= 1");
  if (vars.scheme == analytic::Scheme::Reuse && p.Phi_G > 2.0 * kPi - p.psi)
    throw std::invalid_argument(
        "run_simulation: reuse requires Phi_G <= 2*pi - psi (non-overlap)");

  SimSummary out;
  std::vector<UserField> fields;
  fields.reserve(s.realizations);
  for (int i = 0; i < s.realizations; ++i)
    fields.push_back(generate_field(p.lambda, p.r_G, derive_seed(s.seed, i)));

  phy::SystemParams q = p;
  const bool has_uav = vars.scheme != analytic::Scheme::GbsOnly;
  if (has_uav && s.estimate_mu && vars.r_I < p.r_G) {
    out.mu = estimate_mu(fields, vars.segment(p), p.lambda, s.ticks);
    q.mu = std::max(1.0, out.mu.mu);
  } else {
    out.mu.mu = p.mu;
  }

  out.nu_target =
      vars.r_I > 0.0
          ? analytic::gbs_max_throughput(vars.scheme, vars.rho, vars.r_I, q)
          : 0.0;

  Schedule sched{s.speed, s.ticks};
  out.realizations.assign(s.realizations, {});
  const int threads = std::max(1, s.threads);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next.fetch_add(1); i < s.realizations; i = next.fetch_add(1))
      out.realizations[i] =
          simulate_realization(fields[i], vars, q, sched, out.nu_target,
                               derive_seed(s.seed ^ 0x5DEECE66DULL, i));
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Order-fixed compensated aggregation: identical for any thread count.
  KahanSum ub, ua, g, po;
  for (const auto& r : out.realizations) {
    ub.add(r.uav_throughput_bound);
    ua.add(r.uav_throughput_adaptive);
    g.add(r.gbs_throughput);
    po.add(r.gbs_outage);
    out.coverage_ok = out.coverage_ok && r.coverage_ok;
    out.overlap_free = out.overlap_free && r.overlap_free;
  }
  const double N = s.realizations;
  const double m_ub = ub.sum / N, m_ua = ua.sum / N, m_g = g.sum / N,
               m_po = po.sum / N;
  out.theta_U_bound = p.lambda * m_ub;
  out.theta_U_adaptive = p.lambda * m_ua;
  out.theta_G = p.lambda * m_g;
  out.gbs_outage = m_po;
  if (s.realizations > 1) {
    KahanSum v_ub, v_ua, v_g, v_po;
    for (const auto& r : out.realizations) {
      v_ub.add((r.uav_throughput_bound - m_ub) * (r.uav_throughput_bound - m_ub));
      v_ua.add((r.uav_throughput_adaptive - m_ua) *
               (r.uav_throughput_adaptive - m_ua));
      v_g.add((r.gbs_throughput - m_g) * (r.gbs_throughput - m_g));
      v_po.add((r.gbs_outage - m_po) * (r.gbs_outage - m_po));
    }
    const double denom = N * (N - 1.0);
    out.se_theta_U_bound = p.lambda * std::sqrt(v_ub.sum / denom);
    out.se_theta_U_adaptive = p.lambda * std::sqrt(v_ua.sum / denom);
    out.se_theta_G = p.lambda * std::sqrt(v_g.sum / denom);
    out.se_gbs_outage = std::sqrt(v_po.sum / denom);
  }

  out.theta_G_analytic = p.lambda * out.nu_target;
  out.theta_U_analytic =
      has_uav && vars.r_I < p.r_G
          ? p.lambda * analytic::uav_common_throughput(vars, q)
          : 0.0;
  return out;
}

} // namespace uavcell::montecarlo
