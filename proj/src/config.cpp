#include "hlab/config.hpp"

#include <fstream>
#include <sstream>

namespace hlab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

ConfigFile ConfigFile::parse_text(const std::string& text) {
  ConfigFile cf;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        throw ConfigError(lineno, "malformed section header '" + raw + "'");
      section = trim(line.substr(1, line.size() - 2));
      cf.sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, "expected key = value, got '" + raw + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(lineno, "empty key");
    if (section.empty())
      throw ConfigError(lineno, "key '" + key + "' outside any [section]");
    auto& sec = cf.sections[section];
    if (sec.count(key))
      throw ConfigError(lineno, "duplicate key '" + key + "' in [" + section +
                                    "]");
    sec[key] = value;
  }
  return cf;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  const auto s = sections.find(section);
  return s != sections.end() && s->second.count(key) != 0;
}

std::string ConfigFile::get(const std::string& section, const std::string& key,
                            const std::string& fallback) const {
  const auto s = sections.find(section);
  if (s == sections.end()) return fallback;
  const auto k = s->second.find(key);
  return k == s->second.end() ? fallback : k->second;
}

std::string ConfigFile::require(const std::string& section,
                                const std::string& key) const {
  if (!has(section, key))
    throw std::runtime_error("config: missing required key '" + key +
                             "' in [" + section + "]");
  return sections.at(section).at(key);
}

namespace {

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad number for " + what + ": '" + s +
                             "'");
  }
}

long to_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad integer for " + what + ": '" + s +
                             "'");
  }
}

}  // namespace

ScenarioConfig scenario_config_from(const ConfigFile& cf) {
  ScenarioConfig sc;
  sc.scenario = cf.get("run", "scenario", sc.scenario);
  sc.t_end = to_double(cf.get("run", "t_end", "0.5"), "t_end");
  if (sc.t_end <= 0.0) throw std::runtime_error("config: t_end must be > 0");
  sc.dt = to_double(cf.get("run", "dt", "0"), "dt");
  sc.cfl = to_double(cf.get("run", "cfl", "0.4"), "cfl");
  sc.output_every =
      static_cast<int>(to_long(cf.get("run", "output_every", "0"),
                               "output_every"));
  sc.tracers =
      static_cast<int>(to_long(cf.get("run", "tracers", "0"), "tracers"));
  sc.seed = static_cast<std::uint64_t>(
      to_long(cf.get("run", "seed", "1"), "seed"));
  sc.outdir = cf.get("run", "outdir", "out");

  sc.dims = static_cast<int>(to_long(cf.get("grid", "dims", "3"), "dims"));
  {
    const auto ns = split_list(cf.get("grid", "n", "32 32 32"));
    if (ns.empty() || ns.size() > 3)
      throw std::runtime_error("config: grid n needs 1..3 entries");
    for (std::size_t i = 0; i < 3; ++i)
      sc.n[i] = static_cast<int>(
          to_long(ns[std::min(i, ns.size() - 1)], "grid n"));
    if (sc.dims == 2) sc.n[2] = 1;
  }
  {
    const auto Ls = split_list(
        cf.get("grid", "L", std::to_string(two_pi)));
    if (Ls.empty() || Ls.size() > 3)
      throw std::runtime_error("config: grid L needs 1..3 entries");
    for (std::size_t i = 0; i < 3; ++i)
      sc.L[i] = to_double(Ls[std::min(i, Ls.size() - 1)], "grid L");
  }

  const std::string kind = cf.get("eos", "kind", "ideal");
  const double gamma = to_double(cf.get("eos", "gamma", "1.6666666666666667"),
                                 "gamma");
  const double K = to_double(cf.get("eos", "K", "1"), "K");
  const double c_v = to_double(cf.get("eos", "c_v", "1"), "c_v");
  if (kind == "ideal")
    sc.eos = EquationOfState::ideal(gamma, K, c_v);
  else if (kind == "barotropic")
    sc.eos = EquationOfState::barotropic(gamma, K);
  else
    throw std::runtime_error("config: eos kind must be ideal or barotropic");

  sc.checks = split_list(cf.get("checks", "checks", ""));
  return sc;
}

ScenarioConfig load_scenario_config(const std::string& path) {
  return scenario_config_from(ConfigFile::parse_file(path));
}

}  // namespace hlab
