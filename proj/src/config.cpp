#include "uavcell/config.hpp"

#include "uavcell/units.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace uavcell::config {

namespace {

using units::Dimension;

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw ConfigError(origin + (line > 0 ? ":" + std::to_string(line) : "") +
                    ": " + msg);
}

double number(const std::string& v, Dimension dim, const std::string& origin,
              int line, const std::string& key) {
  try {
    return units::parse_quantity(v, dim);
  } catch (const units::UnitError& e) {
    fail(origin, line, "key '" + key + "': " + e.what());
  }
}

long integer(const std::string& v, const std::string& origin, int line,
             const std::string& key) {
  long out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size())
    fail(origin, line, "key '" + key + "': not an integer: '" + v + "'");
  return out;
}

bool boolean(const std::string& v, const std::string& origin, int line,
             const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(origin, line, "key '" + key + "': not a boolean: '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(v);
  while (std::getline(ss, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

struct Ctx {
  RunConfig* cfg;
  std::string origin;
  int line;
  std::string key;

  double num(const std::string& v, Dimension d) const {
    return number(v, d, origin, line, key);
  }
  std::vector<double> nums(const std::string& v, Dimension d) const {
    std::vector<double> out;
    for (const auto& item : split_list(v)) out.push_back(num(item, d));
    return out;
  }
};

using Setter = std::function<void(const Ctx&, const std::string&)>;

const std::map<std::string, Setter>& key_table() {
  static const std::map<std::string, Setter> table = {
      // [system]
      {"system.f_c", [](const Ctx& c, const std::string& v) { c.cfg->params.f_c = c.num(v, Dimension::Frequency); }},
      {"system.W", [](const Ctx& c, const std::string& v) { c.cfg->params.W = c.num(v, Dimension::Frequency); }},
      {"system.N0", [](const Ctx& c, const std::string& v) { c.cfg->params.N0 = c.num(v, Dimension::PowerDensity); }},
      {"system.H_U", [](const Ctx& c, const std::string& v) { c.cfg->params.H_U = c.num(v, Dimension::Length); }},
      {"system.H_G", [](const Ctx& c, const std::string& v) { c.cfg->params.H_G = c.num(v, Dimension::Length); }},
      {"system.r_G", [](const Ctx& c, const std::string& v) { c.cfg->params.r_G = c.num(v, Dimension::Length); }},
      {"system.G_G", [](const Ctx& c, const std::string& v) { c.cfg->params.G_G = c.num(v, Dimension::Gain); }},
      {"system.n", [](const Ctx& c, const std::string& v) { c.cfg->params.n = c.num(v, Dimension::Dimensionless); }},
      {"system.psi", [](const Ctx& c, const std::string& v) { c.cfg->params.psi = c.num(v, Dimension::Angle); }},
      {"system.Phi_G", [](const Ctx& c, const std::string& v) { c.cfg->params.Phi_G = c.num(v, Dimension::Angle); }},
      {"system.P_U", [](const Ctx& c, const std::string& v) { c.cfg->params.P_U = c.num(v, Dimension::Power); }},
      {"system.P_G", [](const Ctx& c, const std::string& v) { c.cfg->params.P_G = c.num(v, Dimension::Power); }},
      {"system.lambda", [](const Ctx& c, const std::string& v) { c.cfg->params.lambda = c.num(v, Dimension::AreaDensity); }},
      {"system.P_out_max", [](const Ctx& c, const std::string& v) { c.cfg->params.P_out_max = c.num(v, Dimension::Probability); }},
      {"system.mu", [](const Ctx& c, const std::string& v) { c.cfg->params.mu = c.num(v, Dimension::Dimensionless); }},
      // [design]
      {"design.scheme", [](const Ctx& c, const std::string& v) {
         try {
           c.cfg->scheme = analytic::scheme_from_name(v);
         } catch (const std::exception& e) {
           fail(c.origin, c.line, std::string("key 'scheme': ") + e.what());
         }
       }},
      {"design.rho", [](const Ctx& c, const std::string& v) { c.cfg->rho = c.num(v, Dimension::Dimensionless); }},
      {"design.r_I", [](const Ctx& c, const std::string& v) { c.cfg->r_I = c.num(v, Dimension::Length); }},
      {"design.r_U", [](const Ctx& c, const std::string& v) { c.cfg->r_U = c.num(v, Dimension::Length); }},
      // [solver]
      {"solver.nu_tol", [](const Ctx& c, const std::string& v) { c.cfg->solver.nu_tol = c.num(v, Dimension::Dimensionless); }},
      {"solver.rho_tol", [](const Ctx& c, const std::string& v) { c.cfg->solver.rho_tol = c.num(v, Dimension::Dimensionless); }},
      {"solver.r_I_grid", [](const Ctx& c, const std::string& v) { c.cfg->solver.r_I_grid = static_cast<int>(integer(v, c.origin, c.line, c.key)); }},
      {"solver.r_I_refine", [](const Ctx& c, const std::string& v) { c.cfg->solver.r_I_refine = boolean(v, c.origin, c.line, c.key); }},
      // [sim]
      {"sim.realizations", [](const Ctx& c, const std::string& v) { c.cfg->sim.realizations = static_cast<int>(integer(v, c.origin, c.line, c.key)); }},
      {"sim.ticks", [](const Ctx& c, const std::string& v) { c.cfg->sim.ticks = static_cast<int>(integer(v, c.origin, c.line, c.key)); }},
      {"sim.speed", [](const Ctx& c, const std::string& v) { c.cfg->sim.speed = c.num(v, Dimension::Speed); }},
      {"sim.seed", [](const Ctx& c, const std::string& v) { c.cfg->sim.seed = static_cast<std::uint64_t>(integer(v, c.origin, c.line, c.key)); }},
      {"sim.threads", [](const Ctx& c, const std::string& v) { c.cfg->sim.threads = static_cast<int>(integer(v, c.origin, c.line, c.key)); }},
      {"sim.estimate_mu", [](const Ctx& c, const std::string& v) { c.cfg->sim.estimate_mu = boolean(v, c.origin, c.line, c.key); }},
      // [sweep]
      {"sweep.P_U", [](const Ctx& c, const std::string& v) { c.cfg->P_U_list = c.nums(v, Dimension::Power); }},
      {"sweep.lambda", [](const Ctx& c, const std::string& v) { c.cfg->lambda_list = c.nums(v, Dimension::AreaDensity); }},
      {"sweep.M", [](const Ctx& c, const std::string& v) {
         c.cfg->M_list.clear();
         for (const auto& item : split_list(v))
           c.cfg->M_list.push_back(static_cast<int>(integer(item, c.origin, c.line, c.key)));
       }},
      {"sweep.nu_min", [](const Ctx& c, const std::string& v) { c.cfg->nu_min = c.num(v, Dimension::Rate); }},
      {"sweep.simulate", [](const Ctx& c, const std::string& v) { c.cfg->sweep_simulate = boolean(v, c.origin, c.line, c.key); }},
      // [micro]
      {"micro.H_micro", [](const Ctx& c, const std::string& v) { c.cfg->micro.H_micro = c.num(v, Dimension::Length); }},
      {"micro.G_micro", [](const Ctx& c, const std::string& v) { c.cfg->micro.G_micro = c.num(v, Dimension::Gain); }},
      {"micro.P_micro", [](const Ctx& c, const std::string& v) { c.cfg->micro.P_micro = c.num(v, Dimension::Power); }},
      {"micro.P_G", [](const Ctx& c, const std::string& v) { c.cfg->micro_P_G = c.num(v, Dimension::Power); }},
      {"micro.realizations", [](const Ctx& c, const std::string& v) { c.cfg->micro_realizations = static_cast<int>(integer(v, c.origin, c.line, c.key)); }},
      {"micro.d_micro", [](const Ctx& c, const std::string& v) { c.cfg->micro_grids.d_micro = c.nums(v, Dimension::Length); }},
      {"micro.r_micro", [](const Ctx& c, const std::string& v) { c.cfg->micro_grids.r_micro = c.nums(v, Dimension::Length); }},
      {"micro.rho_micro", [](const Ctx& c, const std::string& v) { c.cfg->micro_grids.rho_micro = c.nums(v, Dimension::Dimensionless); }},
      // [energy]
      {"energy.c1", [](const Ctx& c, const std::string& v) { c.cfg->energy.c1 = c.num(v, Dimension::Dimensionless); }},
      {"energy.c2", [](const Ctx& c, const std::string& v) { c.cfg->energy.c2 = c.num(v, Dimension::Dimensionless); }},
      {"energy.g", [](const Ctx& c, const std::string& v) { c.cfg->energy.g = c.num(v, Dimension::Dimensionless); }},
      // [output]
      {"output.format", [](const Ctx& c, const std::string& v) {
         if (v != "csv" && v != "json")
           fail(c.origin, c.line, "key 'format': expected csv or json, got '" + v + "'");
         c.cfg->format = v;
       }},
      {"output.out", [](const Ctx& c, const std::string& v) { c.cfg->out = v; }},
  };
  return table;
}

void set_key(RunConfig& cfg, const std::string& section, const std::string& key,
             const std::string& value, const std::string& origin, int line) {
  const auto& table = key_table();
  const std::string full = section + "." + key;
  const auto it = table.find(full);
  if (it == table.end())
    fail(origin, line, "unknown key '" + key + "' in section [" + section + "]");
  it->second(Ctx{&cfg, origin, line, key}, value);
}

} // namespace

RunConfig parse_config(const std::string& text, const std::string& origin,
                       RunConfig base) {
  RunConfig cfg = std::move(base);
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(origin, line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section.empty()) fail(origin, line, "empty section name");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      fail(origin, line, "expected 'key = value', got '" + s + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(origin, line, "empty key");
    if (section.empty()) fail(origin, line, "key '" + key + "' outside any section");
    set_key(cfg, section, key, value, origin, line);
  }
  return cfg;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path, std::move(base));
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("--set: expected section.key=value, got '" + assignment + "'");
  const std::string path = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  const auto dot = path.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == path.size())
    throw ConfigError("--set: expected section.key=value, got '" + assignment + "'");
  set_key(cfg, path.substr(0, dot), path.substr(dot + 1), value, "--set", 0);
}

} // namespace uavcell::config
