// Acceptance suite: one line per criterion, computed at desk scale.
// Exit code = number of failed criteria.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hlab/casimir.hpp"
#include "hlab/checks.hpp"
#include "hlab/io.hpp"
#include "hlab/noether.hpp"
#include "hlab/scenario.hpp"
#include "test_helpers.hpp"

using namespace hlab;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, bool pass,
               const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", num,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

RunResult run2d(const std::string& scenario, int n, const EquationOfState& eos,
                double t_end, int tracers = 0,
                std::map<std::string, AdvectedObject> dragged = {}) {
  const Grid g = Grid::make(2, {n, n, 1});
  RunOptions opts;
  opts.t_end = t_end;
  opts.dt = 0.6 / n;
  opts.output_every = 1;
  opts.tracer_count = tracers;
  opts.warn_cfl = false;
  return run_scenario(scenario, g, eos, opts, std::move(dragged));
}

RunResult run3d(const std::string& scenario, int n, const EquationOfState& eos,
                double t_end, int tracers = 0) {
  const Grid g = Grid::make(3, {n, n, n});
  RunOptions opts;
  opts.t_end = t_end;
  opts.dt = 1.2 / n;
  opts.output_every = 0;  // ~16 intervals; out_dt still scales as 1/n
  if (t_end / opts.dt < 20) opts.output_every = 1;
  opts.tracer_count = tracers;
  opts.warn_cfl = false;
  return run_scenario(scenario, g, eos, opts);
}

double max_symmetry_residual(const std::string& name, const RunResult& run) {
  double worst = 0.0;
  for (std::size_t i = 0; i < run.snaps.size(); ++i)
    worst = std::max(worst, l2(symmetry_residual(name, run, i)));
  return worst;
}

double rel_linf(const ScalarField& a, const ScalarField& b) {
  const double scale = std::max(linf(a), linf(b));
  if (scale == 0.0) return 0.0;
  ScalarField d = a;
  d -= b;
  return linf(d) / scale;
}

double rel_linf(const VectorField& a, const VectorField& b) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c) m = std::max(m, rel_linf(a.comp[c], b.comp[c]));
  return m;
}

double fluid_distance(const FluidState& fine_on_coarse, const FluidState& c) {
  double m = 0.0;
  auto acc = [&](const ScalarField& x, const ScalarField& y) {
    ScalarField d = x;
    d -= y;
    m = std::max(m, linf(d));
  };
  acc(fine_on_coarse.rho, c.rho);
  acc(fine_on_coarse.S, c.S);
  for (int cc = 0; cc < 3; ++cc) {
    acc(fine_on_coarse.u.comp[cc], c.u.comp[cc]);
    acc(fine_on_coarse.B.comp[cc], c.B.comp[cc]);
  }
  return m;
}

const EquationOfState kIdeal = EquationOfState::ideal();
const EquationOfState kBarotropic = EquationOfState::barotropic(5.0 / 3.0, 1.0);

void c1_operator_order() {
  std::vector<double> h, err;
  for (int n : {32, 64, 128}) {
    h.push_back(two_pi / n);
    err.push_back(operator_selftest_error(n, 3));
  }
  const double order = fit_order(h, err);
  criterion(1, "grad/div/curl order on analytic harmonics", order >= 3.9,
            fmt("order=%.3f need >=3.9", order));
}

void c2_first_law() {
  std::vector<double> h, err;
  for (int n : {32, 64, 128}) {
    const Grid g = Grid::make(3, {n, n, 8});
    const ScalarField rho = sample(g, [](double x, double, double) {
      return 1.0 + 0.2 * std::sin(x);
    });
    const ScalarField S = sample(g, [](double, double y, double) {
      return 0.1 * std::cos(y);
    });
    h.push_back(two_pi / n);
    err.push_back(first_law_residual(kIdeal, rho, S));
  }
  const double order = fit_order(h, err);
  criterion(2, "first-law residual order", order >= 3.9,
            fmt("order=%.3f need >=3.9", order));
}

void c3_solver_convergence() {
  // (a) order in dt at fixed grid
  const Grid g = Grid::make(3, {16, 16, 16});
  const FluidState s0 = make_scenario("abc_mhd", g);
  auto advance = [&](double dt) {
    FluidState s = s0;
    StepOptions so;
    so.warn_cfl = false;
    const int steps = static_cast<int>(std::round(0.25 / dt));
    for (int i = 0; i < steps; ++i) s = step_rk4(s, kIdeal, dt, so);
    return s;
  };
  const FluidState a = advance(0.025);
  const FluidState b = advance(0.0125);
  const FluidState c = advance(0.00625);
  const double e1 = fluid_distance(a, b);
  const double e2 = fluid_distance(b, c);
  const double order_dt = std::log2(e1 / e2);

  // (b) combined order under joint dx, dt refinement
  std::vector<FluidState> finals;
  std::vector<double> hs;
  for (int n : {16, 32, 64}) {
    const RunResult run = run3d("abc_mhd", n, kIdeal, 0.25);
    finals.push_back(run.snaps.back().fluid);
    hs.push_back(two_pi / n);
  }
  std::vector<double> pair_err;
  for (std::size_t i = 0; i + 1 < finals.size(); ++i) {
    FluidState fine_on_coarse = finals[i];
    fine_on_coarse.rho = restrict_to(finals[i + 1].rho, finals[i].grid());
    fine_on_coarse.S = restrict_to(finals[i + 1].S, finals[i].grid());
    fine_on_coarse.u = restrict_to(finals[i + 1].u, finals[i].grid());
    fine_on_coarse.B = restrict_to(finals[i + 1].B, finals[i].grid());
    pair_err.push_back(fluid_distance(fine_on_coarse, finals[i]));
  }
  const double order_combined = std::log2(pair_err[0] / pair_err[1]);

  criterion(3, "solver self-convergence",
            order_dt >= 3.9 && order_combined >= 3.5,
            fmt("dt order=%.3f (>=3.9), combined=%.3f (>=3.5)", order_dt,
                order_combined));
}

void c4_energy() {
  std::vector<double> h, err;
  for (int n : {16, 24, 32}) {
    const RunResult run = run3d("abc_mhd", n, kIdeal, 0.25);
    h.push_back(two_pi / n);
    err.push_back(residual_report("energy", run).max_res_l2());
  }
  const double order = fit_order(h, err);

  const RunResult big = run3d("abc_mhd", 64, kIdeal, 0.5);
  const double drift = residual_report("energy", big).integral_drift();

  criterion(4, "energy law residual order and integral drift",
            order >= 3.5 && drift <= 1e-7,
            fmt("order=%.3f (>=3.5), drift=%.3e (<=1e-7)", order, drift));
}

void c5_local_fluid_helicity() {
  std::vector<double> h, err;
  for (int n : {48, 64, 96}) {
    const RunResult run = run2d("vortex2d", n, kBarotropic, 0.25);
    h.push_back(two_pi / n);
    err.push_back(residual_report("fluid_helicity_local", run).max_res_l2());
  }
  const double order = fit_order(h, err);

  // non-barotropic control must match the transport source pointwise
  double gap[2], src = 0.0;
  int idx = 0;
  for (int n : {48, 96}) {
    const RunResult run = run2d("vortex2d", n, kIdeal, 0.25);
    const std::size_t i = run.snaps.size() / 2;
    ScalarField res = pointwise_residual("fluid_helicity_local", run, i);
    const ScalarField source = fluid_helicity_source(run.snaps[i].fluid, kIdeal);
    src = linf(source);
    res -= source;
    gap[idx++] = linf(res);
  }
  const double gap_order = std::log2(gap[0] / gap[1]);
  criterion(5, "local fluid helicity law + source control",
            order >= 3.5 && gap_order >= 3.5 && src > 1e-3,
            fmt("order=%.3f, source-match order=%.3f", order, gap_order));
}

void c6_nonlocal_fluid_helicity() {
  std::vector<double> h, err;
  for (int n : {48, 64, 96}) {
    const RunResult run = run2d("vortex2d", n, kIdeal, 0.25);
    h.push_back(two_pi / n);
    err.push_back(
        residual_report("fluid_helicity_nonlocal", run).max_res_l2());
  }
  const double order = fit_order(h, err);

  const RunResult big = run2d("vortex2d", 128, kIdeal, 0.5);
  const double drift =
      residual_report("fluid_helicity_nonlocal", big).integral_drift();

  criterion(6, "nonlocal fluid helicity law", order >= 3.5 && drift <= 1e-6,
            fmt("order=%.3f (>=3.5), drift=%.3e (<=1e-6)", order, drift));
}

void c7_local_cross_helicity() {
  std::vector<double> h, err;
  for (int n : {48, 64, 96}) {
    const RunResult run = run2d("bperp_entropy2d", n, kIdeal, 0.25);
    h.push_back(two_pi / n);
    err.push_back(residual_report("cross_helicity_local", run).max_res_l2());
  }
  const double order = fit_order(h, err);

  double gap[2], src = 0.0;
  int idx = 0;
  for (int n : {48, 96}) {
    const RunResult run = run2d("random_smooth", n, kIdeal, 0.25);
    const std::size_t i = run.snaps.size() / 2;
    ScalarField res = pointwise_residual("cross_helicity_local", run, i);
    const ScalarField source = cross_helicity_source(run.snaps[i].fluid, kIdeal);
    src = linf(source);
    res -= source;
    gap[idx++] = linf(res);
  }
  const double gap_order = std::log2(gap[0] / gap[1]);
  criterion(7, "local cross helicity law + source control",
            order >= 3.5 && gap_order >= 3.5 && src > 1e-3,
            fmt("order=%.3f, source-match order=%.3f", order, gap_order));
}

void c8_nonlocal_cross_helicity() {
  std::vector<double> h, err;
  for (int n : {48, 64, 96}) {
    const RunResult run = run2d("random_smooth", n, kIdeal, 0.25);
    h.push_back(two_pi / n);
    err.push_back(
        residual_report("cross_helicity_nonlocal", run).max_res_l2());
  }
  const double order = fit_order(h, err);
  criterion(8, "nonlocal cross helicity law", order >= 3.5,
            fmt("order=%.3f (>=3.5)", order));
}

void c9_magnetic_helicity() {
  std::vector<double> h, err, rec;
  for (int n : {48, 64, 96}) {
    const RunResult run = run2d("random_smooth", n, kIdeal, 0.25);
    h.push_back(two_pi / n);
    err.push_back(
        residual_report("magnetic_helicity_gauge", run).max_res_l2());
    rec.push_back(potential_consistency(run.snaps.back().fluid));
  }
  const double order = fit_order(h, err);
  // a curl-seeded A propagates B = curl A exactly through the linear
  // staging, so the reconstruction error may sit at round-off throughout
  const double rec_worst = *std::max_element(rec.begin(), rec.end());
  const bool rec_ok = rec_worst <= 1e-12 || fit_order(h, rec) >= 3.5;
  criterion(9, "advected-gauge magnetic helicity law",
            order >= 3.5 && rec_ok,
            fmt("order=%.3f, |B-curl A|<=%.2e", order, rec_worst));
}

RunResult run_ertel(int n, double t_end, int tracers) {
  const Grid g = Grid::make(2, {n, n, 1});
  SystemState y = hlab_test::transverse_entropy_vortex(g);
  if (tracers > 0) {
    y.tracers = seed_tracers(y.fluid, y.clebsch, tracers, 1);
    y.has_tracers = true;
  }
  RunOptions opts;
  opts.t_end = t_end;
  opts.dt = 0.6 / n;
  opts.output_every = 1;
  opts.warn_cfl = false;
  return run_system(std::move(y), kIdeal, opts);
}

void c10_ertel() {
  // per-tracer drift of q on a gas run with omega.grad S != 0
  double tracer_err[2];
  int idx = 0;
  for (int n : {48, 96}) {
    const RunResult run = run_ertel(n, 0.4, 128);
    const FluidState& fs = run.snaps.back().fluid;
    ScalarField q = dot(curl(fs.u), grad(fs.S));
    for (std::size_t m = 0; m < q.values.size(); ++m)
      q.values[m] /= fs.rho.values[m];
    const TracerCloud& tc = run.tracer_snaps.back();
    double rms = 0.0;
    for (std::size_t p = 0; p < tc.size(); ++p) {
      const double d =
          interp_scalar(q, tc.x[p]) - tc.carried.at("q0")[p];
      rms += d * d;
    }
    tracer_err[idx++] = std::sqrt(rms / tc.size());
  }
  const double tracer_order = std::log2(tracer_err[0] / tracer_err[1]);

  std::vector<double> h, err;
  for (int n : {48, 64, 96}) {
    const RunResult run = run_ertel(n, 0.25, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < run.snaps.size(); ++i)
      worst = std::max(worst, l2(bianchi_ertel_residual(run, i)));
    h.push_back(two_pi / n);
    err.push_back(worst);
  }
  const double euler_order = fit_order(h, err);
  criterion(10, "Ertel invariant, tracer and Eulerian routes",
            tracer_order >= 3.5 && euler_order >= 3.5,
            fmt("tracer order=%.3f, dq/dt order=%.3f", tracer_order,
                euler_order));
}

void c11_lagrangian_map() {
  std::vector<double> h, erho, eb;
  for (int n : {16, 24, 32}) {
    const RunResult run = run3d("abc_mhd", n, kIdeal, 0.25, 128);
    const TracerCloud& tc = run.tracer_snaps.back();
    const FluidState& fs = run.snaps.back().fluid;
    const auto rho_map = map_density(tc);
    const auto b_map = map_bfield(tc);
    double wr = 0.0, wb = 0.0;
    for (std::size_t p = 0; p < tc.size(); ++p) {
      wr = std::max(wr,
                    std::abs(rho_map[p] - interp_scalar(fs.rho, tc.x[p])));
      const Vec3 be = interp_vector(fs.B, tc.x[p]);
      for (int c = 0; c < 3; ++c)
        wb = std::max(wb, std::abs(b_map[p][c] - be[c]));
    }
    h.push_back(two_pi / n);
    erho.push_back(wr);
    eb.push_back(wb);
  }
  const double order_rho = fit_order(h, erho);
  const double order_b = fit_order(h, eb);
  criterion(11, "Lagrangian map density and frozen-in field",
            order_rho >= 3.0 && order_b >= 3.0,
            fmt("rho order=%.3f, B order=%.3f (>=3)", order_rho, order_b));
}

void c12_symmetry_residuals() {
  std::vector<double> h;
  std::vector<double> e_cross, e_energy, e_hel;
  for (int n : {48, 64, 96}) {
    const RunResult mhd = run2d("random_smooth", n, kIdeal, 0.25);
    const RunResult gas = run2d("vortex2d", n, kIdeal, 0.25);
    h.push_back(two_pi / n);
    e_cross.push_back(max_symmetry_residual("sym_cross_helicity", mhd));
    e_energy.push_back(max_symmetry_residual("sym_energy", mhd));
    e_hel.push_back(max_symmetry_residual("sym_helicity", gas));
  }
  const double o_cross = fit_order(h, e_cross);
  const double o_energy = fit_order(h, e_energy);
  const double o_hel = fit_order(h, e_hel);

  // two code paths assemble the same fields
  const RunResult mhd = run2d("random_smooth", 64, kIdeal, 0.25);
  const RunResult gas = run2d("vortex2d", 64, kIdeal, 0.25);
  const Snapshot& sm = mhd.snaps[mhd.snaps.size() / 2];
  const Snapshot& sg = gas.snaps[gas.snaps.size() / 2];
  double eq = 0.0;
  {
    const ConservedPair np = noether_pair(
        build_candidate("sym_cross_helicity", sm, kIdeal), sm.fluid, kIdeal);
    const ConservedPair direct =
        density_flux("cross_helicity_nonlocal", sm, kIdeal);
    eq = std::max(eq, rel_linf(np.F0, direct.F0));
    eq = std::max(eq, rel_linf(np.flux, direct.flux));
  }
  {
    const ConservedPair np = noether_pair(
        build_candidate("sym_helicity", sg, kIdeal), sg.fluid, kIdeal);
    const ConservedPair direct =
        density_flux("fluid_helicity_nonlocal", sg, kIdeal);
    eq = std::max(eq, rel_linf(np.F0, direct.F0));
    eq = std::max(eq, rel_linf(np.flux, direct.flux));
  }
  {
    const ConservedPair np = noether_pair(
        build_candidate("sym_energy", sm, kIdeal), sm.fluid, kIdeal);
    const ConservedPair direct = density_flux("energy", sm, kIdeal);
    eq = std::max(eq, rel_linf(np.F0, direct.F0));
    eq = std::max(eq, rel_linf(np.flux, direct.flux));
  }

  criterion(12, "divergence-symmetry residuals + two-path equality",
            o_cross >= 3.5 && o_energy >= 3.5 && o_hel >= 3.5 && eq <= 1e-13,
            fmt("orders=%.2f/%.2f/%.2f", o_cross, o_hel, o_energy) +
                fmt(", equality=%.2e (<=1e-13)", eq));
}

void c13_determining_equations() {
  auto worst_over_run = [](const std::string& name, const RunResult& run) {
    double worst = 0.0;
    for (std::size_t i = 0; i < run.snaps.size(); ++i) {
      const DeterminingResiduals d =
          relabel_determining_residuals(name, run, i);
      for (double v : d.l2) worst = std::max(worst, v);
    }
    return worst;
  };

  std::vector<double> h, e_b, e_zeta;
  for (int n : {48, 64, 96}) {
    h.push_back(two_pi / n);
    const RunResult aligned = run2d("bperp_entropy2d", n, kIdeal, 0.25);
    e_b.push_back(worst_over_run("det_b_over_rho", aligned));

    std::map<std::string, AdvectedObject> dragged;
    const Grid g = Grid::make(2, {n, n, 1});
    dragged.emplace("zeta", AdvectedObject::make_scalar(
                                FormKind::Scalar0Form,
                                sample(g, [](double x, double y, double) {
                                  return std::cos(x) + std::cos(y);
                                })));
    const RunResult vortex =
        run2d("vortex2d", n, kBarotropic, 0.25, 0, std::move(dragged));
    e_zeta.push_back(worst_over_run("det_zeta_omega", vortex));
  }
  const double o_b = fit_order(h, e_b);
  const double o_z = fit_order(h, e_zeta);
  criterion(13, "relabeling determining equations (B/rho, zeta omega/rho)",
            o_b >= 3.5 && o_z >= 3.5,
            fmt("orders %.3f and %.3f (>=3.5)", o_b, o_z));
}

void c14_bianchi() {
  auto worst = [](auto&& residual_fn, const RunResult& run) {
    double m = 0.0;
    for (std::size_t i = 0; i < run.snaps.size(); ++i)
      m = std::max(m, l2(residual_fn(run, i)));
    return m;
  };
  std::vector<double> h, e_vort, e_cross, e_ertel;
  for (int n : {48, 64, 96}) {
    h.push_back(two_pi / n);
    e_vort.push_back(
        worst(bianchi_vorticity_residual, run2d("vortex2d", n, kBarotropic, 0.25)));
    e_cross.push_back(worst(bianchi_cross_helicity_residual,
                            run2d("bperp_entropy2d", n, kIdeal, 0.25)));
    e_ertel.push_back(worst(bianchi_ertel_residual, run_ertel(n, 0.25, 0)));
  }
  const double o_v = fit_order(h, e_vort);
  const double o_c = fit_order(h, e_cross);
  const double o_e = fit_order(h, e_ertel);
  criterion(14, "generalized Bianchi identities",
            o_v >= 3.5 && o_c >= 3.5 && o_e >= 3.5,
            fmt("orders %.2f/%.2f/%.2f (>=3.5)", o_v, o_c, o_e));
}

RunResult run_casimir_state(int n, double t_end) {
  const Grid g = Grid::make(2, {n, n, 1});
  SystemState y;
  y.fluid = hlab_test::casimir_drift_state(g);
  y.clebsch = ClebschState(g);
  RunOptions opts;
  opts.t_end = t_end;
  opts.dt = 0.6 / n;
  opts.output_every = 1;
  opts.warn_cfl = false;
  return run_system(std::move(y), kIdeal, opts);
}

void c15_casimirs() {
  // drift at 64^2 over t_end = 0.5 on a state whose integrands are O(1)
  const RunResult big = run_casimir_state(64, 0.5);
  double worst_drift = 0.0;
  for (const auto& e : casimir_catalog())
    worst_drift = std::max(worst_drift, casimir_drift(e.name, big).max_drift());

  // drift order; entries already at round-off on every resolution pass
  // vacuously (summation by parts makes some of them exact on this run)
  std::vector<double> h;
  std::vector<std::vector<double>> drifts(casimir_catalog().size());
  for (int n : {48, 64, 96}) {
    const RunResult run = run_casimir_state(n, 0.25);
    h.push_back(two_pi / n);
    for (std::size_t c = 0; c < casimir_catalog().size(); ++c)
      drifts[c].push_back(
          casimir_drift(casimir_catalog()[c].name, run).max_drift());
  }
  double worst_order = 1e9;
  for (auto& d : drifts) {
    if (d.front() < 1e-12 && d.back() < 1e-12) continue;
    worst_order = std::min(worst_order, fit_order(h, d));
  }

  // determining residuals: catalog converges, the control does not
  double det_order = 1e9, s_floor = 0.0;
  double control_final = 0.0, control_order = 0.0;
  {
    std::vector<double> hh;
    std::vector<std::vector<double>> dets(4);
    std::vector<double> control;
    for (int n : {32, 64}) {
      const Grid g = Grid::make(2, {n, n, 1});
      const FluidState fs = hlab_test::skew_potential_state(g);
      hh.push_back(two_pi / n);
      int c = 0;
      for (const std::string name :
           {"casimir_AB", "casimir_BS", "casimir_S_AB", "casimir_BS2"})
        dets[c++].push_back(
            casimir_determining_residuals(name, fs).momentum_l2);
      control.push_back(
          casimir_determining_residuals("control_rhou2", fs).momentum_l2);
      s_floor = casimir_determining_residuals("casimir_S", fs).momentum_l2;
    }
    for (auto& d : dets) det_order = std::min(det_order, fit_order(hh, d));
    control_final = control.back();
    control_order = fit_order(hh, control);
  }

  criterion(15, "Casimir drifts, determining equations, negative control",
            worst_drift <= 1e-6 && worst_order >= 3.5 && det_order >= 3.5 &&
                s_floor <= 1e-11 && control_final > 0.01 && control_order < 1.0,
            fmt("drift=%.2e (<=1e-6), drift order=%.2f, det order=%.2f",
                worst_drift, worst_order, det_order) +
                fmt(", control=%.2f@order %.2f", control_final, control_order));
}

void c16_liedrag_closure() {
  double e_ab[2], e_bs[2], e_flux[2];
  int idx = 0;
  for (int n : {16, 32}) {
    const Grid g = Grid::make(3, {n, n, n});
    SystemState y;
    y.fluid = make_scenario("abc_mhd", g);
    y.clebsch = ClebschState(g);
    VectorField b = y.fluid.B;
    for (int c = 0; c < 3; ++c)
      for (std::size_t q = 0; q < g.size(); ++q)
        b.comp[c].values[q] /= y.fluid.rho.values[q];
    const AdvectedObject vec0 =
        AdvectedObject::make_vector(FormKind::VectorFieldKind, b);
    const AdvectedObject alpha0 =
        AdvectedObject::make_vector(FormKind::OneForm, y.fluid.A);
    const AdvectedObject nu0 =
        AdvectedObject::make_vector(FormKind::OneForm, grad(y.fluid.S));
    const AdvectedObject rho3 =
        AdvectedObject::make_scalar(FormKind::ThreeForm, y.fluid.rho);
    y.dragged.emplace("b", vec0);
    y.dragged.emplace("alpha", alpha0);
    y.dragged.emplace("nu", nu0);
    y.dragged.emplace("c_ab", contract(vec0, alpha0));
    y.dragged.emplace("c_bs", contract(vec0, nu0));
    y.dragged.emplace("flux2", contract(vec0, rho3));

    RunOptions opts;
    opts.t_end = 0.25;
    opts.dt = 1.2 / n;
    opts.warn_cfl = false;
    const RunResult run = run_system(y, kIdeal, opts);
    const Snapshot& last = run.snaps.back();

    ScalarField dab =
        contract(last.dragged.at("b"), last.dragged.at("alpha")).scalar;
    dab -= last.dragged.at("c_ab").scalar;
    e_ab[idx] = linf(dab);
    ScalarField dbs =
        contract(last.dragged.at("b"), last.dragged.at("nu")).scalar;
    dbs -= last.dragged.at("c_bs").scalar;
    e_bs[idx] = linf(dbs);
    const AdvectedObject rho_t =
        AdvectedObject::make_scalar(FormKind::ThreeForm, last.fluid.rho);
    VectorField dfl = contract(last.dragged.at("b"), rho_t).vector;
    dfl -= last.dragged.at("flux2").vector;
    e_flux[idx] = linf(dfl);
    ++idx;
  }
  const double o1 = std::log2(e_ab[0] / e_ab[1]);
  const double o2 = std::log2(e_bs[0] / e_bs[1]);
  const double o3 = std::log2(e_flux[0] / e_flux[1]);
  criterion(16, "Lie-drag closure of the contraction pairs",
            o1 >= 3.5 && o2 >= 3.5 && o3 >= 3.5,
            fmt("orders %.2f/%.2f/%.2f (>=3.5)", o1, o2, o3));
}

void c17_determinism() {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "hlab_acceptance_det";
  fs::remove_all(base);
  ScenarioConfig sc;
  sc.scenario = "random_smooth";
  sc.dims = 2;
  sc.n = {32, 32, 1};
  sc.t_end = 0.2;
  sc.seed = 11;
  sc.tracers = 32;
  sc.checks = {"energy", "cross_helicity_nonlocal", "casimir:all"};

  for (int pass = 0; pass < 2; ++pass) {
    sc.outdir = (base / ("run" + std::to_string(pass))).string();
    fs::create_directories(sc.outdir);
    execute_run(sc, true);
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  bool same = true;
  for (const char* f :
       {"energy.csv", "cross_helicity_nonlocal.csv", "casimir.csv",
        "tracers.csv", "summary.json"}) {
    const std::string a = slurp(base / "run0" / f);
    same = same && !a.empty() && a == slurp(base / "run1" / f);
  }
  criterion(17, "byte-identical outputs for identical config+seed", same,
            same ? "all CSVs identical" : "outputs differ");
}

}  // namespace

int main() {
  std::printf("hlab acceptance suite\n");
  c1_operator_order();
  c2_first_law();
  c3_solver_convergence();
  c4_energy();
  c5_local_fluid_helicity();
  c6_nonlocal_fluid_helicity();
  c7_local_cross_helicity();
  c8_nonlocal_cross_helicity();
  c9_magnetic_helicity();
  c10_ertel();
  c11_lagrangian_map();
  c12_symmetry_residuals();
  c13_determining_equations();
  c14_bianchi();
  c15_casimirs();
  c16_liedrag_closure();
  c17_determinism();
  std::printf("%d of 17 criteria failed\n", g_failures);
  return g_failures;
}
