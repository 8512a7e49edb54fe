#pragma once

#include <optional>
#include <string>

#include "hlab/field.hpp"
#include "hlab/thermo.hpp"

namespace hlab {

/// Evolved Eulerian state. mu0 = 1 throughout. A, when carried, is the
/// vector potential in the advected gauge (its 1-form rides with the flow),
/// so B - curl(A) stays at truncation level of the initial data.
struct FluidState {
  double t = 0.0;
  ScalarField rho;
  VectorField u;
  ScalarField S;
  VectorField B;
  VectorField A;
  bool has_A = false;
  ScalarField Phi;  // static external gravity, zero by default
  bool has_Phi = false;

  explicit FluidState(const Grid& g)
      : rho(g, 1.0), u(g), S(g), B(g), A(g), Phi(g) {}
  FluidState() = default;

  const Grid& grid() const { return rho.grid; }
};

struct FluidTangent {
  ScalarField rho;
  VectorField u;
  ScalarField S;
  VectorField B;
  VectorField A;

  explicit FluidTangent(const Grid& g) : rho(g), u(g), S(g), B(g), A(g) {}
  FluidTangent() = default;

  FluidTangent& axpy(double a, const FluidTangent& o) {
    rho.axpy(a, o.rho);
    u.axpy(a, o.u);
    S.axpy(a, o.S);
    B.axpy(a, o.B);
    A.axpy(a, o.A);
    return *this;
  }
};

/// Apply state += a * tangent (time not touched).
void apply_tangent(FluidState& s, double a, const FluidTangent& k);

/// Time derivatives of (rho, u, S, B, A):
///   d rho/dt = -div(rho u)
///   d(rho u)/dt = -div(rho u(x)u + (p + B^2/2) I - B(x)B) - rho grad(Phi),
///                 converted to du/dt
///   d S/dt   = -u.grad S
///   d B/dt   = curl(u x B) - u div B
///   d A/dt   = u x curl(A) - grad(u.A)
/// Throws std::domain_error if rho <= 0 anywhere. Pass a precomputed thermo
/// evaluation to share it across co-stepped subsystems.
FluidTangent rhs(const FluidState& state, const EquationOfState& eos,
                 const ThermoFields* pre = nullptr);

/// Largest stable step: cfl * min(dx) / max(|u| + c_fast),
/// c_fast^2 = gamma p / rho + |B|^2 / rho.
double cfl_dt(const FluidState& state, const EquationOfState& eos,
              double cfl = 0.4);

struct StepOptions {
  double cfl = 0.4;
  bool warn_cfl = true;  // warn to stderr on violation, then proceed
};

/// Classical RK4 over all evolved fields; advances t by dt.
/// Throws std::runtime_error if the result is not finite.
FluidState step_rk4(const FluidState& state, const EquationOfState& eos,
                    double dt, const StepOptions& opts = {});

/// Magnetic field reconstruction error ||B - curl A||_inf (diagnostic).
double potential_consistency(const FluidState& state);

}  // namespace hlab
