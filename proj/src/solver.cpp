#include "hlab/solver.hpp"

#include <cmath>

#include "hlab/errors.hpp"
#include <iostream>
#include <stdexcept>

namespace hlab {

void apply_tangent(FluidState& s, double a, const FluidTangent& k) {
  s.rho.axpy(a, k.rho);
  s.u.axpy(a, k.u);
  s.S.axpy(a, k.S);
  s.B.axpy(a, k.B);
  if (s.has_A) s.A.axpy(a, k.A);
}

FluidTangent rhs(const FluidState& state, const EquationOfState& eos,
                 const ThermoFields* pre) {
  const Grid& g = state.grid();
  FluidTangent out(g);

  const ThermoFields th = pre ? *pre : eval_thermo(eos, state.rho, state.S);

  // mass
  const VectorField mom = scale(state.u, state.rho);
  out.rho = -1.0 * div(mom);

  // momentum in conservative form, then converted to du/dt
  ScalarField ptot = th.p;
  {
    const ScalarField magp = norm2(state.B);
    ptot.axpy(0.5, magp);
  }
  for (int i = 0; i < 3; ++i) {
    ScalarField dm(g);  // d(rho u_i)/dt
    for (int j = 0; j < 3; ++j) {
      if (g.n[j] == 1) continue;
      ScalarField flux = multiply(mom.comp[j], state.u.comp[i]);
      for (std::size_t q = 0; q < flux.values.size(); ++q)
        flux.values[q] -= state.B.comp[j].values[q] * state.B.comp[i].values[q];
      if (i == j) flux += ptot;
      dm -= deriv(flux, j);
    }
    if (state.has_Phi) {
      const ScalarField dPhi = deriv(state.Phi, i);
      for (std::size_t q = 0; q < dm.values.size(); ++q)
        dm.values[q] -= state.rho.values[q] * dPhi.values[q];
    }
    // du_i/dt = (d(rho u_i)/dt - u_i drho/dt) / rho
    for (std::size_t q = 0; q < dm.values.size(); ++q)
      out.u.comp[i].values[q] =
          (dm.values[q] - state.u.comp[i].values[q] * out.rho.values[q]) /
          state.rho.values[q];
  }

  // entropy
  out.S = -1.0 * advect(state.u, state.S);

  // induction, with the div(B) transport term kept as written
  {
    const VectorField uxB = cross(state.u, state.B);
    out.B = curl(uxB);
    const ScalarField divB = div(state.B);
    for (int c = 0; c < 3; ++c)
      for (std::size_t q = 0; q < divB.values.size(); ++q)
        out.B.comp[c].values[q] -=
            state.u.comp[c].values[q] * divB.values[q];
  }

  // advected-gauge vector potential
  if (state.has_A) {
    const VectorField curlA = curl(state.A);
    out.A = cross(state.u, curlA);
    const ScalarField uA = dot(state.u, state.A);
    out.A -= grad(uA);
  }

  return out;
}

double cfl_dt(const FluidState& state, const EquationOfState& eos,
              double cfl) {
  double vmax = 0.0;
  for (std::size_t q = 0; q < state.rho.values.size(); ++q) {
    const double r = state.rho.values[q];
    const double c2 = eos.sound_speed2(r, state.S.values[q]);
    const double b2 = state.B.comp[0].values[q] * state.B.comp[0].values[q] +
                      state.B.comp[1].values[q] * state.B.comp[1].values[q] +
                      state.B.comp[2].values[q] * state.B.comp[2].values[q];
    const double uu = std::sqrt(
        state.u.comp[0].values[q] * state.u.comp[0].values[q] +
        state.u.comp[1].values[q] * state.u.comp[1].values[q] +
        state.u.comp[2].values[q] * state.u.comp[2].values[q]);
    vmax = std::max(vmax, uu + std::sqrt(c2 + b2 / r));
  }
  if (vmax <= 0.0) vmax = 1.0;
  return cfl * state.grid().min_dx() / vmax;
}

FluidState step_rk4(const FluidState& state, const EquationOfState& eos,
                    double dt, const StepOptions& opts) {
  if (opts.warn_cfl) {
    const double limit = cfl_dt(state, eos, opts.cfl);
    if (dt > limit)
      std::cerr << "hlab: warning: dt=" << dt << " exceeds CFL limit "
                << limit << " at t=" << state.t << "\n";
  }

  const FluidTangent k1 = rhs(state, eos);
  FluidState s2 = state;
  apply_tangent(s2, 0.5 * dt, k1);
  const FluidTangent k2 = rhs(s2, eos);
  FluidState s3 = state;
  apply_tangent(s3, 0.5 * dt, k2);
  const FluidTangent k3 = rhs(s3, eos);
  FluidState s4 = state;
  apply_tangent(s4, dt, k3);
  const FluidTangent k4 = rhs(s4, eos);

  FluidState out = state;
  apply_tangent(out, dt / 6.0, k1);
  apply_tangent(out, dt / 3.0, k2);
  apply_tangent(out, dt / 3.0, k3);
  apply_tangent(out, dt / 6.0, k4);
  out.t = state.t + dt;

  if (!finite(out.rho) || !finite(out.u) || !finite(out.S) || !finite(out.B) ||
      (out.has_A && !finite(out.A)))
    throw NumericalAbort("step_rk4: non-finite state at t=" +
                         std::to_string(out.t));
  return out;
}

double potential_consistency(const FluidState& state) {
  if (!state.has_A) return 0.0;
  VectorField d = curl(state.A);
  d -= state.B;
  return linf(d);
}

}  // namespace hlab
