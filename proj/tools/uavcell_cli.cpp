#include "uavcell/config.hpp"
#include "uavcell/energy.hpp"
#include "uavcell/io.hpp"
#include "uavcell/microcell.hpp"
#include "uavcell/montecarlo.hpp"
#include "uavcell/optimizer.hpp"
#include "uavcell/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <thread>

namespace {

using json = nlohmann::json;
using namespace uavcell;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fd(double v) { return io::format_double(v); }

void emit(const config::RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write output file '" + cfg.out + "'");
  f << text;
}

optimizer::Solution solve_scheme(analytic::Scheme scheme,
                                 const phy::SystemParams& p,
                                 const optimizer::SolverSettings& s) {
  switch (scheme) {
    case analytic::Scheme::Orthogonal: return optimizer::solve_orthogonal(p, s);
    case analytic::Scheme::Reuse: return optimizer::solve_reuse(p, s);
    case analytic::Scheme::GbsOnly: return optimizer::solve_gbs_only(p);
  }
  throw std::logic_error("unreachable scheme");
}

void warn_solution(const optimizer::Solution& sol) {
  if (sol.boundary)
    std::cerr << "warning: no interior crossing; boundary optimum returned\n";
  if (sol.clamped)
    std::cerr << "warning: geometric r_U optimum clamped into [r_I, r_G]\n";
}

analytic::DesignVars design_from(const config::RunConfig& cfg) {
  analytic::DesignVars v;
  v.scheme = cfg.scheme;
  v.rho = cfg.scheme == analytic::Scheme::Orthogonal ? cfg.rho
          : cfg.scheme == analytic::Scheme::Reuse    ? 1.0
                                                     : 0.0;
  v.r_I = cfg.scheme == analytic::Scheme::GbsOnly ? cfg.params.r_G : cfg.r_I;
  if (cfg.r_U > 0.0) {
    v.r_U = cfg.r_U;
  } else if (cfg.scheme == analytic::Scheme::GbsOnly) {
    v.r_U = cfg.params.r_G;
  } else {
    v.r_U = geometry::optimal_radius(v.segment(cfg.params)).r_U;
  }
  return v;
}

json solution_json(const optimizer::Solution& sol, const phy::SystemParams& p) {
  return json{{"scheme", analytic::scheme_name(sol.vars.scheme)},
              {"nu_bar", sol.report.nu_bar},
              {"nu_bps", sol.report.nu_bar * p.W},
              {"theta", sol.report.theta},
              {"theta_per_km2", sol.report.theta * 1e6},
              {"rho", sol.vars.rho},
              {"r_I", sol.vars.r_I},
              {"r_U", sol.vars.r_U},
              {"R_U_bar", sol.report.R_U_bar},
              {"R_G_bar", sol.report.R_G_bar},
              {"p_out", sol.report.p_out},
              {"iterations", sol.trace.size()},
              {"converged", sol.converged},
              {"boundary", sol.boundary},
              {"clamped", sol.clamped}};
}

int cmd_solve(const config::RunConfig& cfg) {
  const auto sol = solve_scheme(cfg.scheme, cfg.params, cfg.solver);
  warn_solution(sol);
  if (cfg.format == "json") {
    emit(cfg, json{{"schema", "uavcell.solve.v1"},
                   {"solution", solution_json(sol, cfg.params)}}
                 .dump(2) +
                 "\n");
  } else {
    io::CsvTable t({"scheme", "nu_bar", "nu_bps", "theta", "rho", "r_I", "r_U",
                    "R_U_bar", "R_G_bar", "p_out", "iterations"});
    t.row({analytic::scheme_name(sol.vars.scheme), fd(sol.report.nu_bar),
           fd(sol.report.nu_bar * cfg.params.W), fd(sol.report.theta),
           fd(sol.vars.rho), fd(sol.vars.r_I), fd(sol.vars.r_U),
           fd(sol.report.R_U_bar), fd(sol.report.R_G_bar),
           fd(sol.report.p_out), std::to_string(sol.trace.size())});
    emit(cfg, t.str());
  }
  return 0;
}

int cmd_sweep(const config::RunConfig& cfg) {
  if (cfg.P_U_list.empty() && cfg.lambda_list.empty())
    throw config::ConfigError("sweep: no axis given (set sweep.P_U and/or sweep.lambda)");
  const analytic::Scheme schemes[] = {analytic::Scheme::GbsOnly,
                                      analytic::Scheme::Orthogonal,
                                      analytic::Scheme::Reuse};
  io::CsvTable t({"axis", "value", "scheme", "nu_bar", "theta", "rho", "r_I",
                  "r_U", "theta_U_sim", "theta_G_sim"});
  json rows = json::array();

  auto run_point = [&](const std::string& axis, double value,
                       const phy::SystemParams& p) {
    for (const auto scheme : schemes) {
      const auto sol = solve_scheme(scheme, p, cfg.solver);
      double theta_U_sim = kNaN, theta_G_sim = kNaN;
      if (cfg.sweep_simulate && scheme != analytic::Scheme::GbsOnly) {
        const auto sum = montecarlo::run_simulation(sol.vars, p, cfg.sim);
        theta_U_sim = sum.theta_U_bound;
        theta_G_sim = sum.theta_G;
      }
      t.row({axis, fd(value), analytic::scheme_name(scheme),
             fd(sol.report.nu_bar), fd(sol.report.theta), fd(sol.vars.rho),
             fd(sol.vars.r_I), fd(sol.vars.r_U), fd(theta_U_sim),
             fd(theta_G_sim)});
      json r = solution_json(sol, p);
      r["axis"] = axis;
      r["value"] = value;
      if (cfg.sweep_simulate) {
        r["theta_U_sim"] = theta_U_sim;
        r["theta_G_sim"] = theta_G_sim;
      }
      rows.push_back(std::move(r));
    }
  };

  for (double pu : cfg.P_U_list) {
    phy::SystemParams p = cfg.params;
    p.P_U = pu;
    run_point("P_U", pu, p);
  }
  for (double lam : cfg.lambda_list) {
    phy::SystemParams p = cfg.params;
    p.lambda = lam;
    run_point("lambda", lam, p);
  }
  if (cfg.format == "json")
    emit(cfg, json{{"schema", "uavcell.sweep.v1"}, {"rows", rows}}.dump(2) + "\n");
  else
    emit(cfg, t.str());
  return 0;
}

int cmd_simulate(const config::RunConfig& cfg) {
  const auto vars = design_from(cfg);
  const auto sum = montecarlo::run_simulation(vars, cfg.params, cfg.sim);
  if (!sum.coverage_ok) std::cerr << "warning: coverage invariant violated\n";
  if (!sum.overlap_free) std::cerr << "warning: segment/sector overlap detected\n";

  const double gap_U = sum.theta_U_analytic > 0
                           ? sum.theta_U_bound / sum.theta_U_analytic - 1.0
                           : kNaN;
  const double gap_G = sum.theta_G_analytic > 0
                           ? sum.theta_G / sum.theta_G_analytic - 1.0
                           : kNaN;

  if (cfg.format == "json") {
    json reals = json::array();
    for (const auto& r : sum.realizations)
      reals.push_back({{"uav_bound", r.uav_throughput_bound},
                       {"uav_adaptive", r.uav_throughput_adaptive},
                       {"gbs", r.gbs_throughput},
                       {"gbs_outage", r.gbs_outage},
                       {"uav_users", r.uav_users},
                       {"gbs_users", r.gbs_users},
                       {"empty_ticks", r.empty_ticks}});
    emit(cfg,
         json{{"schema", "uavcell.simulate.v1"},
              {"mu", sum.mu.mu},
              {"nu_target", sum.nu_target},
              {"theta_U_bound", sum.theta_U_bound},
              {"theta_U_adaptive", sum.theta_U_adaptive},
              {"theta_G", sum.theta_G},
              {"se_theta_U_bound", sum.se_theta_U_bound},
              {"se_theta_U_adaptive", sum.se_theta_U_adaptive},
              {"se_theta_G", sum.se_theta_G},
              {"gbs_outage", sum.gbs_outage},
              {"se_gbs_outage", sum.se_gbs_outage},
              {"theta_U_analytic", sum.theta_U_analytic},
              {"theta_G_analytic", sum.theta_G_analytic},
              {"rel_gap_U", gap_U},
              {"rel_gap_G", gap_G},
              {"coverage_ok", sum.coverage_ok},
              {"overlap_free", sum.overlap_free},
              {"realizations", reals}}
             .dump(2) +
             "\n");
  } else {
    io::CsvTable t({"kind", "index", "uav_bound", "uav_adaptive", "gbs",
                    "gbs_outage", "mu", "theta_U_analytic", "theta_G_analytic",
                    "rel_gap_U", "rel_gap_G"});
    for (std::size_t i = 0; i < sum.realizations.size(); ++i) {
      const auto& r = sum.realizations[i];
      t.row({"realization", std::to_string(i), fd(r.uav_throughput_bound),
             fd(r.uav_throughput_adaptive), fd(r.gbs_throughput),
             fd(r.gbs_outage), fd(kNaN), fd(kNaN), fd(kNaN), fd(kNaN),
             fd(kNaN)});
    }
    t.row({"aggregate", "", fd(sum.theta_U_bound), fd(sum.theta_U_adaptive),
           fd(sum.theta_G), fd(sum.gbs_outage), fd(sum.mu.mu),
           fd(sum.theta_U_analytic), fd(sum.theta_G_analytic), fd(gap_U),
           fd(gap_G)});
    emit(cfg, t.str());
  }
  return 0;
}

int cmd_benchmark(const config::RunConfig& cfg) {
  std::vector<int> Ms = cfg.M_list;
  if (Ms.empty()) Ms = {1, 4, 8, 12, 16};

  phy::SystemParams p = cfg.params;
  p.P_G = cfg.micro_P_G;

  std::vector<montecarlo::UserField> fields;
  for (int i = 0; i < cfg.micro_realizations; ++i)
    fields.push_back(montecarlo::generate_field(
        p.lambda, p.r_G, montecarlo::derive_seed(cfg.sim.seed, i)));

  microcell::SearchGrids grids = cfg.micro_grids;
  const auto defaults = microcell::default_grids(p.r_G);
  if (grids.d_micro.empty()) grids.d_micro = defaults.d_micro;
  if (grids.r_micro.empty()) grids.r_micro = defaults.r_micro;
  if (grids.rho_micro.empty()) grids.rho_micro = defaults.rho_micro;

  io::CsvTable t({"scheme", "M", "theta", "theta_per_km2", "d_micro", "r_micro",
                  "rho_micro"});
  json rows = json::array();

  // UAV reference with the micro tier's power budget.
  phy::SystemParams pu = p;
  pu.P_U = cfg.micro.P_micro;
  const auto uav = optimizer::solve_orthogonal(pu, cfg.solver);
  t.row({"uav-orthogonal", "", fd(uav.report.theta), fd(uav.report.theta * 1e6),
         fd(kNaN), fd(kNaN), fd(kNaN)});
  rows.push_back({{"scheme", "uav-orthogonal"}, {"theta", uav.report.theta}});

  const auto gbs = optimizer::solve_gbs_only(p);
  t.row({"gbs-only", "", fd(gbs.report.theta), fd(gbs.report.theta * 1e6),
         fd(kNaN), fd(kNaN), fd(kNaN)});
  rows.push_back({{"scheme", "gbs-only"}, {"theta", gbs.report.theta}});

  for (int M : Ms) {
    microcell::SearchGrids g = grids;
    const auto best = microcell::optimize_layout(M, fields, p, g);
    t.row({"micro", std::to_string(M), fd(best.report.theta),
           fd(best.report.theta * 1e6), fd(best.layout.d_micro),
           fd(best.layout.r_micro), fd(best.layout.rho_micro)});
    rows.push_back({{"scheme", "micro"},
                    {"M", M},
                    {"theta", best.report.theta},
                    {"d_micro", best.layout.d_micro},
                    {"r_micro", best.layout.r_micro},
                    {"rho_micro", best.layout.rho_micro}});
  }
  if (cfg.format == "json")
    emit(cfg, json{{"schema", "uavcell.benchmark.v1"}, {"rows", rows}}.dump(2) + "\n");
  else
    emit(cfg, t.str());
  return 0;
}

int cmd_energy(const config::RunConfig& cfg) {
  analytic::DesignVars vars = design_from(cfg);
  if (vars.scheme == analytic::Scheme::GbsOnly)
    throw config::ConfigError("energy: needs a UAV-serving scheme");

  phy::SystemParams p = cfg.params;
  if (cfg.sim.estimate_mu) {
    std::vector<montecarlo::UserField> fields;
    for (int i = 0; i < cfg.sim.realizations; ++i)
      fields.push_back(montecarlo::generate_field(
          p.lambda, p.r_G, montecarlo::derive_seed(cfg.sim.seed, i)));
    p.mu = std::max(
        1.0, montecarlo::estimate_mu(fields, vars.segment(p), p.lambda, cfg.sim.ticks)
                 .mu);
  }
  const double theta_U = p.lambda * analytic::uav_common_throughput(vars, p);
  const auto rep = energy::make_report(theta_U, vars, p, cfg.energy);

  if (cfg.format == "json") {
    emit(cfg, json{{"schema", "uavcell.energy.v1"},
                   {"mu", p.mu},
                   {"r_U", rep.r_U},
                   {"V_opt", rep.V_opt},
                   {"P_cir", rep.P_cir},
                   {"theta_U", rep.theta_U},
                   {"ee_bits_per_J", rep.ee},
                   {"ee_kbits_per_J", rep.ee / 1e3}}
                 .dump(2) +
                 "\n");
  } else {
    io::CsvTable t({"key", "value"});
    t.row({"mu", fd(p.mu)});
    t.row({"r_U_m", fd(rep.r_U)});
    t.row({"V_opt_m_per_s", fd(rep.V_opt)});
    t.row({"P_cir_W", fd(rep.P_cir)});
    t.row({"theta_U", fd(rep.theta_U)});
    t.row({"ee_kbits_per_J", fd(rep.ee / 1e3)});
    emit(cfg, t.str());
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-min throughput planning for a hybrid GBS + cyclical-UAV cell"};
  app.require_subcommand(1);

  std::string config_path, format, out, scheme;
  std::vector<std::string> sets;
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_option("--config", config_path, "Config file (sectioned key = value)");
  app.add_option("--set", sets, "Override: section.key=value")->take_all();
  app.add_option("--seed", seed, "Master RNG seed");
  app.add_option("--threads", threads, "Worker threads (default: hardware)");
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out, "Output path (default: stdout)");
  app.add_option("--scheme", scheme, "orthogonal | reuse | gbs-only");

  auto* solve = app.add_subcommand("solve", "Optimize one scheme at fixed parameters");
  auto* sweep = app.add_subcommand("sweep", "Per-scheme optima along P_U and/or lambda axes");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo validation of a design point");
  auto* benchmark = app.add_subcommand("benchmark", "Micro-cell offloading comparison");
  auto* energy = app.add_subcommand("energy", "Propulsion power and energy efficiency report");
  for (auto* sub : {solve, sweep, simulate, benchmark, energy}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    config::RunConfig cfg;
    cfg.sim.threads = static_cast<int>(std::thread::hardware_concurrency());
    if (cfg.sim.threads < 1) cfg.sim.threads = 1;
    cfg.sim.seed = 1;
    if (!config_path.empty()) cfg = config::load_config(config_path, std::move(cfg));
    for (const auto& s : sets) config::apply_override(cfg, s);
    if (app.count("--seed")) cfg.sim.seed = seed;
    if (app.count("--threads")) cfg.sim.threads = threads;
    if (!format.empty()) cfg.format = format;
    if (app.count("--out")) cfg.out = out;
    if (!scheme.empty()) cfg.scheme = analytic::scheme_from_name(scheme);
    cfg.params.validate();

    if (solve->parsed()) return cmd_solve(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (benchmark->parsed()) return cmd_benchmark(cfg);
    if (energy->parsed()) return cmd_energy(cfg);
    return 2;
  } catch (const config::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const uavcell::units::UnitError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
