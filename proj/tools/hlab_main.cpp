// hlab: scenario runner and conservation-law report emitter.
//
// Exit codes: 0 success, 1 config/usage error, 2 numerical abort,
// 3 convergence-order failure (convergence subcommand).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlab/checks.hpp"
#include "hlab/errors.hpp"
#include "hlab/io.hpp"
#include "hlab/scenario.hpp"

namespace {

int cmd_run(const std::string& config_path) {
  hlab::ScenarioConfig sc = hlab::load_scenario_config(config_path);
  std::filesystem::create_directories(sc.outdir);
  const hlab::RunArtifacts art = hlab::execute_run(sc, /*write_outputs=*/true);
  std::printf("run: %s  n=%d %d %d  t_end=%g  dt=%g  snapshots=%zu\n",
              sc.scenario.c_str(), sc.n[0], sc.n[1], sc.n[2], sc.t_end,
              art.run.dt, art.run.snaps.size());
  for (const auto& oc : art.outcomes) {
    if (oc.family == "casimir")
      std::printf("  %-28s drift=%.3e\n", oc.name.c_str(), oc.casimir_drift);
    else if (oc.family == "determining")
      std::printf("  %-28s r=[%.3e %.3e %.3e %.3e]\n", oc.name.c_str(),
                  oc.determining_l2[0], oc.determining_l2[1],
                  oc.determining_l2[2], oc.determining_l2[3]);
    else
      std::printf("  %-28s res_L2=%.3e res_Linf=%.3e drift=%.3e\n",
                  oc.name.c_str(), oc.final_res_l2, oc.final_res_linf,
                  oc.integral_drift);
  }
  std::printf("outputs written to %s\n", sc.outdir.c_str());
  return 0;
}

int cmd_convergence(const std::string& config_path,
                    const std::vector<int>& resolutions, double min_order,
                    const std::string& orders_path) {
  if (resolutions.size() < 3)
    throw std::invalid_argument("convergence: need at least 3 resolutions");

  hlab::ScenarioConfig sc = hlab::load_scenario_config(config_path);
  const std::vector<std::string> checks = hlab::expand_checks(sc.checks);

  nlohmann::json orders;
  std::vector<std::string> failures;

  auto record = [&](const std::string& check, double threshold,
                    const std::vector<double>& h,
                    const std::vector<double>& err) {
    const double order = hlab::fit_order(h, err);
    nlohmann::json e;
    e["order"] = order;
    e["threshold"] = threshold;
    e["resolutions"] = resolutions;
    e["errors"] = err;
    e["pass"] = order >= threshold;
    orders["checks"][check] = e;
    std::printf("  %-28s order=%.3f (threshold %.2f) %s\n", check.c_str(),
                order, threshold, order >= threshold ? "ok" : "FAIL");
    if (order < threshold) failures.push_back(check);
  };

  // built-in operator self-test needs no runs, only grids
  bool run_ops = false;
  std::vector<std::string> run_checks;
  for (const auto& c : checks) {
    if (c == "operator_selftest")
      run_ops = true;
    else
      run_checks.push_back(c);
  }

  if (run_ops) {
    std::vector<double> h, err;
    for (int n : resolutions) {
      h.push_back(hlab::two_pi / n);
      err.push_back(hlab::operator_selftest_error(n, sc.dims == 2 ? 2 : 3));
    }
    record("operator_selftest", 3.9, h, err);
  }

  if (!run_checks.empty()) {
    std::vector<std::vector<double>> metrics(run_checks.size());
    std::vector<double> h;
    for (int n : resolutions) {
      hlab::ScenarioConfig rc = sc;
      for (int a = 0; a < rc.dims; ++a) rc.n[a] = n;
      if (rc.dims == 2) rc.n[2] = 1;
      rc.dt = 0.0;          // CFL-derived so dt scales with dx
      rc.output_every = 1;  // snapshot spacing scales with dx too
      rc.checks = run_checks;
      const hlab::RunArtifacts art = hlab::execute_run(rc, false);
      h.push_back(rc.L[0] / n);
      for (std::size_t c = 0; c < run_checks.size(); ++c)
        metrics[c].push_back(
            hlab::convergence_metric(run_checks[c], art.run));
    }
    for (std::size_t c = 0; c < run_checks.size(); ++c)
      record(run_checks[c], min_order, h, metrics[c]);
  }

  std::ofstream out(orders_path);
  out << orders.dump(2) << '\n';
  std::printf("orders written to %s\n", orders_path.c_str());

  if (!failures.empty()) {
    std::fprintf(stderr, "convergence: order below threshold for:");
    for (const auto& f : failures) std::fprintf(stderr, " %s", f.c_str());
    std::fprintf(stderr, "\n");
    return 3;
  }
  return 0;
}

int cmd_list() {
  std::printf("scenarios:\n");
  for (const auto& s : hlab::scenario_catalog())
    std::printf("  %-20s %s%s\n", s.name.c_str(), s.description.c_str(),
                s.dims ? (s.dims == 2 ? " [2.5D]" : " [3D]") : "");
  std::printf("checks:\n");
  for (const auto& c : hlab::registered_checks())
    std::printf("  %-28s [%s] %s\n", c.name.c_str(), c.family.c_str(),
                c.description.c_str());
  std::printf("aliases:\n  %-28s expands to every casimir entry\n",
              "casimir:all");
  return 0;
}

int cmd_dump(const std::string& path) {
  const hlab::FieldDump dump = hlab::read_field_dump(path);
  std::printf("HLAB1 dims=%d n=%d %d %d L=%.17g %.17g %.17g components=%zu\n",
              dump.grid.dims, dump.grid.n[0], dump.grid.n[1], dump.grid.n[2],
              dump.grid.length[0], dump.grid.length[1], dump.grid.length[2],
              dump.blocks.size());
  for (std::size_t b = 0; b < dump.blocks.size(); ++b) {
    double mn = dump.blocks[b][0], mx = mn, sum = 0.0, sum2 = 0.0;
    for (double v : dump.blocks[b]) {
      mn = std::min(mn, v);
      mx = std::max(mx, v);
      sum += v;
      sum2 += v * v;
    }
    const double n = static_cast<double>(dump.blocks[b].size());
    std::printf("  block %zu: min=%.6e max=%.6e mean=%.6e rms=%.6e\n", b, mn,
                mx, sum / n, std::sqrt(sum2 / n));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hlab: periodic-box ideal MHD / gas dynamics laboratory for "
      "conservation-law verification. HLAB_THREADS caps kernel parallelism."};
  app.require_subcommand(1);

  std::string config_path, dump_path;
  std::vector<int> resolutions;
  double min_order = 3.5;
  std::string orders_path = "orders.json";

  auto* run = app.add_subcommand("run", "run a scenario config");
  run->add_option("config", config_path, "config file")->required();

  auto* conv = app.add_subcommand(
      "convergence", "rerun a scenario over several resolutions, fit orders");
  conv->add_option("config", config_path, "config file")->required();
  conv->add_option("--n", resolutions, "resolutions, e.g. --n 24,32,48")
      ->required()
      ->delimiter(',');
  conv->add_option("--min-order", min_order,
                   "order threshold for run checks (default 3.5)");
  conv->add_option("--orders", orders_path, "orders JSON output path");

  auto* list = app.add_subcommand("list", "print scenario and check catalogs");

  auto* dump = app.add_subcommand("dump", "print a field dump header + stats");
  dump->add_option("file", dump_path, "HLAB1 dump file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path);
    if (conv->parsed())
      return cmd_convergence(config_path, resolutions, min_order, orders_path);
    if (list->parsed()) return cmd_list();
    if (dump->parsed()) return cmd_dump(dump_path);
  } catch (const hlab::NumericalAbort& e) {
    std::fprintf(stderr, "hlab: numerical abort: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "hlab: numerical abort: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "hlab: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
