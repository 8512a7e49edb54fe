#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hlab/clebsch.hpp"
#include "hlab/lagrangian.hpp"
#include "hlab/liedrag.hpp"
#include "hlab/solver.hpp"

namespace hlab {

/// Everything advanced inside one RK4 stage, so the fluid, the nonlocal
/// potentials, any dragged objects and the tracer cloud all see the same
/// stage fields (single coupled system).
struct SystemState {
  FluidState fluid;
  ClebschState clebsch;
  std::map<std::string, AdvectedObject> dragged;
  TracerCloud tracers;
  bool has_tracers = false;
};

struct SystemTangent {
  FluidTangent fluid;
  ClebschTangent clebsch;
  std::map<std::string, AdvectedTangent> dragged;
  TracerTangent tracers;
};

SystemTangent system_rhs(const SystemState& y, const EquationOfState& eos);
SystemState system_step_rk4(const SystemState& y, const EquationOfState& eos,
                            double dt);

/// One stored output time: fluid + potentials + dragged objects.
struct Snapshot {
  double t = 0.0;
  FluidState fluid;
  ClebschState clebsch;
  std::map<std::string, AdvectedObject> dragged;
};

struct RunOptions {
  double t_end = 0.5;
  double dt = 0.0;       // <= 0: use CFL of the initial state
  double cfl = 0.4;
  int output_every = 0;  // steps between snapshots; 0: aim for ~16 intervals
  int tracer_count = 0;  // 0: no tracers
  std::uint64_t seed = 1;
  bool warn_cfl = true;
};

struct RunResult {
  Grid grid;
  EquationOfState eos;
  double dt = 0.0;      // fixed step actually used
  double out_dt = 0.0;  // snapshot spacing (uniform)
  std::vector<Snapshot> snaps;
  std::vector<TracerCloud> tracer_snaps;  // aligned with snaps when present
  bool has_tracers = false;
};

/// Fixed-step RK4 run with snapshots at uniform times. dt is rounded down so
/// an integer number of steps lands exactly on t_end and on each output time.
RunResult run_system(SystemState initial, const EquationOfState& eos,
                     const RunOptions& opts);

/// Convenience: scenario + zero-initialized potentials (+ optional dragged
/// objects and tracers) evolved with run_system.
RunResult run_scenario(const std::string& scenario, const Grid& grid,
                       const EquationOfState& eos, const RunOptions& opts,
                       std::map<std::string, AdvectedObject> dragged = {});

}  // namespace hlab
