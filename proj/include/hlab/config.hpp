#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlab/thermo.hpp"

namespace hlab {

/// Parse failure carrying the 1-based line number of the offending line.
struct ConfigError : std::runtime_error {
  int line;
  ConfigError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

/// Flat key=value sections:
///   [run]
///   scenario = abc_mhd
/// '#' starts a comment; keys are unique per section.
struct ConfigFile {
  std::map<std::string, std::map<std::string, std::string>> sections;

  static ConfigFile parse_text(const std::string& text);
  static ConfigFile parse_file(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback) const;
  std::string require(const std::string& section, const std::string& key) const;
};

struct ScenarioConfig {
  std::string scenario = "uniform";
  int dims = 3;
  std::array<int, 3> n{32, 32, 32};
  std::array<double, 3> L{two_pi, two_pi, two_pi};
  EquationOfState eos = EquationOfState::ideal();
  double t_end = 0.5;
  double dt = 0.0;  // <= 0: CFL-derived
  double cfl = 0.4;
  int output_every = 0;
  int tracers = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;
  std::string outdir = "out";
};

ScenarioConfig load_scenario_config(const std::string& path);
ScenarioConfig scenario_config_from(const ConfigFile& cf);

}  // namespace hlab
