#include "hlab/run.hpp"

#include <cmath>

#include "hlab/errors.hpp"
#include <iostream>
#include <stdexcept>

#include "hlab/scenario.hpp"

namespace hlab {

SystemTangent system_rhs(const SystemState& y, const EquationOfState& eos) {
  SystemTangent out;
  const ThermoFields th = eval_thermo(eos, y.fluid.rho, y.fluid.S);
  out.fluid = rhs(y.fluid, eos, &th);
  out.clebsch = clebsch_rhs(y.clebsch, y.fluid, eos, &th);
  for (const auto& [name, obj] : y.dragged)
    out.dragged.emplace(name, drag_rhs(obj, y.fluid.u));
  if (y.has_tracers) {
    const TracerStageFields sf = make_stage_fields(y.fluid, eos, &th);
    out.tracers = tracer_rhs(y.tracers, sf);
  }
  return out;
}

static void apply_system_tangent(SystemState& y, double a,
                                 const SystemTangent& k) {
  apply_tangent(y.fluid, a, k.fluid);
  apply_tangent(y.clebsch, a, k.clebsch);
  for (auto& [name, obj] : y.dragged)
    apply_tangent(obj, a, k.dragged.at(name));
  if (y.has_tracers) apply_tangent(y.tracers, a, k.tracers);
}

SystemState system_step_rk4(const SystemState& y, const EquationOfState& eos,
                            double dt) {
  const SystemTangent k1 = system_rhs(y, eos);
  SystemState s2 = y;
  apply_system_tangent(s2, 0.5 * dt, k1);
  const SystemTangent k2 = system_rhs(s2, eos);
  SystemState s3 = y;
  apply_system_tangent(s3, 0.5 * dt, k2);
  const SystemTangent k3 = system_rhs(s3, eos);
  SystemState s4 = y;
  apply_system_tangent(s4, dt, k3);
  const SystemTangent k4 = system_rhs(s4, eos);

  SystemState out = y;
  apply_system_tangent(out, dt / 6.0, k1);
  apply_system_tangent(out, dt / 3.0, k2);
  apply_system_tangent(out, dt / 3.0, k3);
  apply_system_tangent(out, dt / 6.0, k4);
  out.fluid.t = y.fluid.t + dt;

  if (!finite(out.fluid.rho) || !finite(out.fluid.u) || !finite(out.fluid.B))
    throw NumericalAbort("system_step_rk4: non-finite state at t=" +
                         std::to_string(out.fluid.t));
  return out;
}

static Snapshot snapshot_of(const SystemState& y) {
  Snapshot s;
  s.t = y.fluid.t;
  s.fluid = y.fluid;
  s.clebsch = y.clebsch;
  s.dragged = y.dragged;
  return s;
}

RunResult run_system(SystemState y, const EquationOfState& eos,
                     const RunOptions& opts) {
  if (opts.t_end <= 0.0)
    throw std::invalid_argument("run_system: t_end must be positive");

  // the CFL limit tightens as flows steepen, so the derived step keeps a
  // margin below the t=0 limit
  double dt0 =
      opts.dt > 0.0 ? opts.dt : 0.9 * cfl_dt(y.fluid, eos, opts.cfl);
  int output_every = opts.output_every;
  if (output_every <= 0) {
    // aim for ~16 uniform intervals
    const int steps_guess = std::max(16, (int)std::ceil(opts.t_end / dt0));
    output_every = std::max(1, steps_guess / 16);
  }
  // at least 5 stored states so the 4th-order time stencils always apply
  const int n_out =
      std::max(4, (int)std::ceil(opts.t_end / (dt0 * output_every)));
  const int n_steps = n_out * output_every;
  const double dt = opts.t_end / n_steps;

  RunResult res;
  res.grid = y.fluid.grid();
  res.eos = eos;
  res.dt = dt;
  res.out_dt = dt * output_every;
  res.has_tracers = y.has_tracers;

  res.snaps.push_back(snapshot_of(y));
  if (y.has_tracers) res.tracer_snaps.push_back(y.tracers);

  for (int step = 1; step <= n_steps; ++step) {
    if (opts.warn_cfl) {
      const double limit = cfl_dt(y.fluid, eos, opts.cfl);
      if (dt > limit)
        std::cerr << "hlab: warning: dt=" << dt << " exceeds CFL limit "
                  << limit << " at t=" << y.fluid.t << "\n";
    }
    y = system_step_rk4(y, eos, dt);
    if (step % output_every == 0) {
      res.snaps.push_back(snapshot_of(y));
      if (y.has_tracers) res.tracer_snaps.push_back(y.tracers);
    }
  }
  return res;
}

RunResult run_scenario(const std::string& scenario, const Grid& grid,
                       const EquationOfState& eos, const RunOptions& opts,
                       std::map<std::string, AdvectedObject> dragged) {
  SystemState y;
  y.fluid = make_scenario(scenario, grid, opts.seed);
  y.clebsch = ClebschState(grid);
  y.dragged = std::move(dragged);
  if (opts.tracer_count > 0) {
    y.tracers = seed_tracers(y.fluid, y.clebsch, opts.tracer_count, opts.seed);
    y.has_tracers = true;
  }
  return run_system(std::move(y), eos, opts);
}

}  // namespace hlab
