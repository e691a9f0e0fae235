#include "sgn/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "sgn/errors.hpp"

namespace sgn {

namespace {

constexpr std::pair<Preset, std::string_view> kPresetNames[] = {
    {Preset::line, "line"},           {Preset::soldef, "soldef"},
    {Preset::solgauss_plus, "solgauss-plus"}, {Preset::solgauss_minus, "solgauss-minus"},
    {Preset::cross, "cross"},         {Preset::gauss, "gauss"},
    {Preset::custom, "custom"},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, std::string_view v) {
  double out = 0.0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || end != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError(key + ": not a finite number: '" + std::string(v) + "'");
  }
  return out;
}

long to_long(const std::string& key, std::string_view v) {
  long out = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || end != v.data() + v.size()) {
    throw ConfigError(key + ": not an integer: '" + std::string(v) + "'");
  }
  return out;
}

std::size_t to_size(const std::string& key, std::string_view v) {
  const long n = to_long(key, v);
  if (n <= 0) throw ConfigError(key + ": must be positive");
  return static_cast<std::size_t>(n);
}

bool to_bool(const std::string& key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": not a boolean: '" + std::string(v) + "'");
}

std::vector<double> to_list(const std::string& key, std::string_view v) {
  std::vector<double> out;
  if (trim(v).empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = v.find(',', pos);
    out.push_back(to_double(key, trim(v.substr(pos, comma - pos))));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, std::string_view)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"g", [](auto& c, auto& k, auto v) { c.physics.g = to_double(k, v); }},
      {"h_inf", [](auto& c, auto& k, auto v) { c.physics.h_inf = to_double(k, v); }},
      {"c", [](auto& c, auto& k, auto v) { c.c = to_double(k, v); }},
      {"eps", [](auto& c, auto& k, auto v) { c.eps = to_double(k, v); }},
      {"mode", [](auto& c, auto& k, auto v) { c.mode = static_cast<int>(to_long(k, v)); }},
      {"alpha", [](auto& c, auto& k, auto v) { c.alpha = to_double(k, v); }},
      {"x0", [](auto& c, auto& k, auto v) { c.x0 = to_double(k, v); }},
      {"amp", [](auto& c, auto& k, auto v) { c.amp = to_double(k, v); }},
      {"literal_hump", [](auto& c, auto& k, auto v) { c.literal_hump = to_bool(k, v); }},
      {"subtract_background", [](auto& c, auto& k, auto v) { c.subtract_background = to_bool(k, v); }},
      {"init", [](auto& c, auto&, auto v) { c.init_path = std::string(v); }},
      {"nx", [](auto& c, auto& k, auto v) { c.nx = to_size(k, v); }},
      {"ny", [](auto& c, auto& k, auto v) { c.ny = to_size(k, v); }},
      {"lx", [](auto& c, auto& k, auto v) { c.lx = to_double(k, v); }},
      {"ly", [](auto& c, auto& k, auto v) { c.ly = to_double(k, v); }},
      {"tmax", [](auto& c, auto& k, auto v) { c.t_max = to_double(k, v); }},
      {"nt", [](auto& c, auto& k, auto v) { c.nt = static_cast<int>(to_long(k, v)); }},
      {"snap", [](auto& c, auto& k, auto v) { c.snapshot_times = to_list(k, v); }},
      {"krasny", [](auto& c, auto& k, auto v) { c.krasny_threshold = to_double(k, v); }},
      {"dealias", [](auto& c, auto& k, auto v) { c.dealias = to_bool(k, v); }},
      {"gmres_tol", [](auto& c, auto& k, auto v) { c.gmres.tolerance = to_double(k, v); }},
      {"gmres_restart", [](auto& c, auto& k, auto v) { c.gmres.restart = static_cast<int>(to_long(k, v)); }},
      {"gmres_maxit", [](auto& c, auto& k, auto v) { c.gmres.max_iterations = static_cast<int>(to_long(k, v)); }},
      {"out", [](auto& c, auto&, auto v) { c.output_dir = std::string(v); }},
      {"cadence", [](auto& c, auto& k, auto v) { c.cadence = static_cast<int>(to_long(k, v)); }},
  };
  return table;
}

}  // namespace

Preset parse_preset(std::string_view name) {
  for (const auto& [p, n] : kPresetNames) {
    if (n == name) return p;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

std::string_view preset_name(Preset p) {
  for (const auto& [q, n] : kPresetNames) {
    if (q == p) return n;
  }
  return "?";
}

ExperimentConfig preset_defaults(Preset p) {
  ExperimentConfig c;
  c.preset = p;
  switch (p) {
    case Preset::line:
    case Preset::soldef:
      c.eps = p == Preset::soldef ? 0.1 : 0.0;
      c.nx = 1024;
      c.ny = 128;
      c.lx = 10.0;
      c.ly = 2.0;
      c.x0 = -10.0;
      c.t_max = 10.0;
      c.nt = 1000;
      c.snapshot_times = {0.0, 3.5, 7.0, 10.0};
      break;
    case Preset::solgauss_plus:
    case Preset::solgauss_minus:
      c.nx = 2048;
      c.ny = 256;
      c.lx = 20.0;
      c.ly = 2.0;
      c.x0 = -20.0;
      c.t_max = 20.0;
      c.nt = 2000;
      c.snapshot_times = {0.0, 10.0, 20.0};
      break;
    case Preset::cross:
      c.nx = c.ny = 1024;
      c.lx = c.ly = 10.0;
      c.x0 = 0.0;
      c.t_max = 10.0;
      c.nt = 1000;
      c.snapshot_times = {0.0, 2.5, 5.0, 10.0};
      break;
    case Preset::gauss:
      c.nx = c.ny = 1024;
      c.lx = c.ly = 5.0;
      c.t_max = 5.0;
      c.nt = 1000;
      c.snapshot_times = {0.0, 1.75, 3.5, 5.0};
      break;
    case Preset::custom:
      c.nx = c.ny = 64;
      c.lx = c.ly = 1.0;
      c.t_max = 1.0;
      c.nt = 100;
      c.snapshot_times = {0.0, 1.0};
      break;
  }
  return c;
}

void apply_ci_scale(ExperimentConfig& cfg) {
  cfg.nx /= 4;
  cfg.ny /= 4;
}

void ExperimentConfig::validate() const {
  physics.validate();
  gmres.validate();
  auto pow2 = [](std::size_t n) { return n >= 8 && (n & (n - 1)) == 0; };
  if (!pow2(nx) || !pow2(ny)) throw ConfigError("nx and ny must be powers of two, at least 8");
  if (!(lx > 0.0) || !(ly > 0.0)) throw ConfigError("lx and ly must be positive");
  if (!(t_max > 0.0)) throw ConfigError("tmax must be positive");
  if (nt < 1) throw ConfigError("nt must be at least 1");
  if (cadence < 1) throw ConfigError("cadence must be at least 1");
  if (krasny_threshold < 0.0) throw ConfigError("krasny threshold must be non-negative");
  if (mode < 0) throw ConfigError("mode must be non-negative");
  if (!(amp >= 0.0)) throw ConfigError("amp must be non-negative");
  if (output_dir.empty()) throw ConfigError("output directory must not be empty");
  const bool wave = preset != Preset::gauss && preset != Preset::custom;
  if (wave && !(c * c > physics.g * physics.h_inf)) throw ConfigError("solitary presets need c^2 > g h_inf");
  if (preset == Preset::gauss && !(alpha > 0.0)) throw ConfigError("alpha must be positive");
  for (double t : snapshot_times) {
    if (!(t >= 0.0 && t <= t_max)) throw ConfigError("snapshot times must lie in [0, tmax]");
  }
  snapshot_steps();
}

std::vector<int> ExperimentConfig::snapshot_steps() const {
  std::vector<int> steps;
  for (double t : snapshot_times) steps.push_back(static_cast<int>(std::lround(t / dt())));
  std::vector<int> sorted = steps;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError("two snapshot times map to the same step");
  }
  return steps;
}

Settings parse_settings(std::string_view text) {
  Settings out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    out[key] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

Settings read_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_settings(ss.str());
}

ExperimentConfig build_config(const Settings& s) {
  const auto preset = s.find("preset");
  ExperimentConfig cfg = preset_defaults(preset == s.end() ? Preset::line : parse_preset(preset->second));
  if (const auto scale = s.find("scale"); scale != s.end()) {
    if (scale->second == "ci") {
      apply_ci_scale(cfg);
    } else if (scale->second != "full") {
      throw ConfigError("scale must be 'full' or 'ci'");
    }
  }
  const auto& table = setters();
  for (const auto& [key, value] : s) {
    if (key == "preset" || key == "scale") continue;
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown setting '" + key + "'");
    it->second(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

Settings to_settings(const ExperimentConfig& c) {
  std::string snaps;
  for (std::size_t i = 0; i < c.snapshot_times.size(); ++i) {
    if (i) snaps += ',';
    snaps += fmt(c.snapshot_times[i]);
  }
  return {
      {"preset", std::string(preset_name(c.preset))},
      {"g", fmt(c.physics.g)},
      {"h_inf", fmt(c.physics.h_inf)},
      {"c", fmt(c.c)},
      {"eps", fmt(c.eps)},
      {"mode", std::to_string(c.mode)},
      {"alpha", fmt(c.alpha)},
      {"x0", fmt(c.x0)},
      {"amp", fmt(c.amp)},
      {"literal_hump", c.literal_hump ? "true" : "false"},
      {"subtract_background", c.subtract_background ? "true" : "false"},
      {"init", c.init_path},
      {"nx", std::to_string(c.nx)},
      {"ny", std::to_string(c.ny)},
      {"lx", fmt(c.lx)},
      {"ly", fmt(c.ly)},
      {"tmax", fmt(c.t_max)},
      {"nt", std::to_string(c.nt)},
      {"snap", snaps},
      {"krasny", fmt(c.krasny_threshold)},
      {"dealias", c.dealias ? "true" : "false"},
      {"gmres_tol", fmt(c.gmres.tolerance)},
      {"gmres_restart", std::to_string(c.gmres.restart)},
      {"gmres_maxit", std::to_string(c.gmres.max_iterations)},
      {"out", c.output_dir},
      {"cadence", std::to_string(c.cadence)},
  };
}

}  // namespace sgn
