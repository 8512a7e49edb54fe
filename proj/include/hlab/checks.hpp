#pragma once

#include <array>
#include <string>
#include <vector>

#include "hlab/config.hpp"
#include "hlab/noether.hpp"

namespace hlab {

/// One runnable check name with its family and description, as printed by
/// `hlab list`.
struct RegisteredCheck {
  std::string name;
  std::string family;  // invariant | bianchi | symmetry | determining | casimir
  std::string description;
};

const std::vector<RegisteredCheck>& registered_checks();
bool is_registered_check(const std::string& name);

/// Expands casimir:all and validates every name; throws
/// std::invalid_argument on unknown checks.
std::vector<std::string> expand_checks(const std::vector<std::string>& names);

struct CheckOutcome {
  std::string name;
  std::string family;
  double final_res_l2 = 0.0;
  double final_res_linf = 0.0;
  double max_res_l2 = 0.0;
  double integral_drift = 0.0;
  double casimir_drift = 0.0;
  std::array<double, 4> determining_l2{};
  std::string regime;  // symmetry candidates: "gauge" or "determining"
};

struct RunArtifacts {
  RunResult run;
  std::vector<CheckOutcome> outcomes;
};

/// Seeds the scenario plus whatever dragged labels the requested checks
/// need, runs the coupled system, evaluates every check, and (optionally)
/// writes per-check CSVs, the tracer CSV, checkpoints and summary.json
/// under sc.outdir.
RunArtifacts execute_run(const ScenarioConfig& sc, bool write_outputs);

/// The per-resolution error metric whose decay rate cmd_convergence fits.
double convergence_metric(const std::string& check, const RunResult& run);

/// Built-in operator self-test: worst grad/div/curl Linf error against
/// analytic harmonics on an (n, 8, 8)-style grid of the given resolution.
double operator_selftest_error(int n, int dims);

void write_summary_json(const std::string& path,
                        const std::vector<CheckOutcome>& outcomes);

}  // namespace hlab
