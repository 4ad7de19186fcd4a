#ifndef UAVCELL_CONFIG_HPP
#define UAVCELL_CONFIG_HPP

#include "uavcell/analytic.hpp"
#include "uavcell/energy.hpp"
#include "uavcell/microcell.hpp"
#include "uavcell/montecarlo.hpp"
#include "uavcell/optimizer.hpp"
#include "uavcell/phy.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace uavcell::config {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything a CLI run needs. Defaults reproduce the standard parameter
/// table; a config file and then --set overrides are layered on top.
struct RunConfig {
  phy::SystemParams params;
  analytic::Scheme scheme = analytic::Scheme::Orthogonal;

  // [design] fixed design point for simulate/energy; r_U <= 0 means
  // "geometric optimum for r_I".
  double rho = 0.5;
  double r_I = 500.0;
  double r_U = 0.0;

  optimizer::SolverSettings solver;
  montecarlo::SimSettings sim;

  // [sweep]
  std::vector<double> P_U_list;    // W
  std::vector<double> lambda_list; // /m^2
  std::vector<int> M_list;
  double nu_min = 100e3; // bps floor for max-density readouts
  bool sweep_simulate = false;

  // [micro] empty grid axes fall back to microcell::default_grids.
  microcell::MicroLayout micro; // carries H_micro/G_micro/P_micro defaults
  microcell::SearchGrids micro_grids;
  double micro_P_G = 39.810717055349734; // 46 dBm benchmark GBS power, W
  int micro_realizations = 20;

  energy::EnergyParams energy;

  // [output]
  std::string format = "csv"; // csv | json
  std::string out;            // empty = stdout
};

/// Parses the sectioned key-value format:
///   [section]
///   key = value   # comment
/// Unknown sections/keys, bad numbers, and bad unit suffixes raise
/// ConfigError naming the line and key. `origin` labels the error source
/// (file name or "--set").
RunConfig parse_config(const std::string& text, const std::string& origin,
                       RunConfig base = {});

/// Reads and parses a config file. Throws ConfigError when unreadable.
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Applies one "section.key=value" override in place.
void apply_override(RunConfig& cfg, const std::string& assignment);

} // namespace uavcell::config

#endif
