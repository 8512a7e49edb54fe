#pragma once

#include "hlab/solver.hpp"

namespace hlab {

/// Nonlocal potentials and passive labels riding with the flow. phi and r
/// accumulate the Bernoulli and temperature histories along fluid paths,
/// realized here as Eulerian advection-reaction fields; lambda_t and mu are
/// passive scalars.
struct ClebschState {
  ScalarField phi;
  ScalarField r;
  ScalarField lambda_t;
  ScalarField mu;

  explicit ClebschState(const Grid& g)
      : phi(g), r(g), lambda_t(g), mu(g) {}
  ClebschState() = default;
};

struct ClebschTangent {
  ScalarField phi;
  ScalarField r;
  ScalarField lambda_t;
  ScalarField mu;

  explicit ClebschTangent(const Grid& g)
      : phi(g), r(g), lambda_t(g), mu(g) {}
  ClebschTangent() = default;

  ClebschTangent& axpy(double a, const ClebschTangent& o) {
    phi.axpy(a, o.phi);
    r.axpy(a, o.r);
    lambda_t.axpy(a, o.lambda_t);
    mu.axpy(a, o.mu);
    return *this;
  }
};

void apply_tangent(ClebschState& s, double a, const ClebschTangent& k);

/// d phi/dt = |u|^2/2 - h, d r/dt = -T, d lambda_t/dt = d mu/dt = 0, all
/// written in Eulerian advection-reaction form.
ClebschTangent clebsch_rhs(const ClebschState& cs, const FluidState& fs,
                           const EquationOfState& eos,
                           const ThermoFields* pre = nullptr);

struct GeneralizedVorticity {
  VectorField w;      // u - grad phi + r grad S
  VectorField Omega;  // curl w
};

GeneralizedVorticity generalized_vorticity(const ClebschState& cs,
                                           const FluidState& fs);

/// || curl(w) - (curl u + grad r x grad S - curl grad phi) ||_inf:
/// a pure discrete-identity residual between the two routes to Omega.
double omega_identity_residual(const ClebschState& cs, const FluidState& fs);

/// || u - (grad phi - r grad S - lambda_t grad mu) ||_inf, meaningful when
/// the initial data was built from a Clebsch triple (gas-dynamic case).
double clebsch_reconstruction_residual(const ClebschState& cs,
                                       const FluidState& fs);

}  // namespace hlab
