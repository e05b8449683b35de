#include "tslab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace tslab {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Number with an optional "pi" factor: "3", "-2.5e-3", "40pi", "40*pi", "pi".
double parse_real(const std::string& key, const std::string& v) {
  std::string body = v;
  double factor = 1.0;
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    body.resize(body.size() - 2);
    if (!body.empty() && body.back() == '*') body.pop_back();
    if (body.empty() || body == "-" || body == "+") body += "1";
  }
  double out = 0.0;
  const char* first = body.data() + (body.starts_with('+') ? 1 : 0);
  const auto res = std::from_chars(first, body.data() + body.size(), out);
  if (res.ec != std::errc() || res.ptr != body.data() + body.size() || !std::isfinite(out)) {
    throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
  }
  return out * factor;
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& v) {
  Int out{};
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
  }
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(key, trim(item)));
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

std::string parse_choice(const std::string& key, const std::string& v, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (v == a) return v;
  }
  std::string msg = "key '" + key + "': '" + v + "' is not one of";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw ConfigError(msg);
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, const std::string&)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"kind", [](auto& c, auto& k, auto& v) { c.kind = parse_choice(k, v, {"nls", "nlkg"}); }},
      {"m", [](auto& c, auto& k, auto& v) { c.m = parse_real(k, v); }},
      {"alpha.variant",
       [](auto& c, auto& k, auto& v) { c.alpha_variant = parse_choice(k, v, {"polynomial", "root", "rational"}); }},
      {"alpha.coeffs", [](auto& c, auto& k, auto& v) { c.alpha_coeffs = parse_list(k, v); }},
      {"alpha.root", [](auto& c, auto& k, auto& v) { c.alpha_root = parse_int<unsigned>(k, v); }},
      {"alpha.denominator", [](auto& c, auto& k, auto& v) { c.alpha_denominator = parse_list(k, v); }},
      {"L", [](auto& c, auto& k, auto& v) { c.L = parse_real(k, v); }},
      {"nx", [](auto& c, auto& k, auto& v) { c.nx = parse_int<std::size_t>(k, v); }},
      {"dt", [](auto& c, auto& k, auto& v) { c.dt = parse_real(k, v); }},
      {"t_end", [](auto& c, auto& k, auto& v) { c.t_end = parse_real(k, v); }},
      {"snapshot_every", [](auto& c, auto& k, auto& v) { c.snapshot_every = parse_int<std::size_t>(k, v); }},
      {"seed", [](auto& c, auto& k, auto& v) { c.seed = parse_int<std::uint64_t>(k, v); }},
      {"n", [](auto& c, auto& k, auto& v) { c.n = parse_int<int>(k, v); }},
      {"initial.kind",
       [](auto& c, auto& k, auto& v) {
         c.initial_kind = parse_choice(k, v, {"profile", "gaussian", "breather", "akhmediev", "file"});
       }},
      {"initial.omega", [](auto& c, auto& k, auto& v) { c.initial_omega = parse_real(k, v); }},
      {"initial.amplitude", [](auto& c, auto& k, auto& v) { c.initial_amplitude = parse_real(k, v); }},
      {"initial.width", [](auto& c, auto& k, auto& v) { c.initial_width = parse_real(k, v); }},
      {"initial.center", [](auto& c, auto& k, auto& v) { c.initial_center = parse_real(k, v); }},
      {"initial.noise", [](auto& c, auto& k, auto& v) { c.initial_noise = parse_real(k, v); }},
      {"initial.path", [](auto& c, auto&, auto& v) { c.initial_path = v; }},
      {"delta", [](auto& c, auto& k, auto& v) { c.delta = parse_real(k, v); }},
      {"band_halfwidth", [](auto& c, auto& k, auto& v) { c.band_halfwidth = parse_int<std::size_t>(k, v); }},
      {"window", [](auto& c, auto& k, auto& v) { c.window = parse_choice(k, v, {"none", "hann"}); }},
      {"rel_threshold", [](auto& c, auto& k, auto& v) { c.rel_threshold = parse_real(k, v); }},
      {"trials", [](auto& c, auto& k, auto& v) { c.trials = parse_int<std::size_t>(k, v); }},
      {"x_cells", [](auto& c, auto& k, auto& v) { c.x_cells = parse_int<std::size_t>(k, v); }},
      {"w_cells", [](auto& c, auto& k, auto& v) { c.w_cells = parse_int<std::size_t>(k, v); }},
      {"radius", [](auto& c, auto& k, auto& v) { c.radius = parse_int<std::size_t>(k, v); }},
      {"tol_cells", [](auto& c, auto& k, auto& v) { c.tol_cells = parse_real(k, v); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [k, _] : setters()) out.push_back(k);
    return out;
  }();
  return keys;
}

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
  ExperimentConfig cfg;
  std::map<std::string, std::size_t> seen;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno) + ": ";
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(where + "key '" + key + "' has no value");
    const auto& table = setters();
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& p) { return p.first == key; });
    if (it == table.end()) throw ConfigError(where + "unknown key '" + key + "'");
    if (seen.count(key)) throw ConfigError(where + "duplicate key '" + key + "'");
    seen[key] = lineno;
    try {
      it->second(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

Nonlinearity make_nonlinearity(const ExperimentConfig& cfg) {
  try {
    if (cfg.alpha_variant == "polynomial") return Nonlinearity::polynomial(Poly(cfg.alpha_coeffs));
    if (cfg.alpha_variant == "root") return Nonlinearity::root(Poly(cfg.alpha_coeffs), cfg.alpha_root);
    return Nonlinearity::rational(Poly(cfg.alpha_coeffs), Poly(cfg.alpha_denominator));
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("alpha: ") + e.what());
  }
}

ModelSpec make_model(const ExperimentConfig& cfg) {
  if (!(cfg.L > 0.0)) throw ConfigError("L must be positive");
  if (cfg.nx < 8) throw ConfigError("nx must be at least 8");
  ModelSpec model{cfg.kind == "nls" ? ModelKind::nls : ModelKind::nlkg, cfg.m, make_nonlinearity(cfg),
                  AxisGrid(-0.5 * cfg.L, cfg.L / static_cast<double>(cfg.nx), cfg.nx), cfg.dt, cfg.t_end};
  try {
    validate(model);
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }
  return model;
}

AnalysisOptions make_analysis_options(const ExperimentConfig& cfg) {
  if (!(cfg.delta >= 0.0 && cfg.delta < 1.0)) throw ConfigError("delta must lie in [0, 1)");
  return AnalysisOptions{parse_window(cfg.window), cfg.delta, cfg.band_halfwidth};
}

}  // namespace tslab
