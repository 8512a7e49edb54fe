#pragma once

#include <string>
#include <vector>

#include "hlab/run.hpp"

namespace hlab {

/// Fixed catalog of conserved functionals C = int rho G d^3x with G built
/// from the advected scalars S, A.B/rho and B.grad S/rho. Closed-form
/// variational derivatives are hand-derived per entry (see casimir.cpp), so
/// the determining-equation residuals isolate discretization error.
struct CasimirInfo {
  std::string name;
  bool needs_A;
  std::string description;
};

const std::vector<CasimirInfo>& casimir_catalog();

/// C = int rho G d^3x; throws std::invalid_argument when the entry needs the
/// vector potential and fs carries none, or the name is unknown.
double casimir_value(const std::string& name, const FluidState& fs);

/// Natural magnitude int rho |G| d^3x, used as the relative-drift floor for
/// entries whose signed integral can vanish by cancellation.
double casimir_abs_scale(const std::string& name, const FluidState& fs);

struct CasimirDriftReport {
  std::string name;
  std::vector<double> times;
  std::vector<double> value;
  std::vector<double> drift;  // |C(t)-C(0)| / max(|C(0)|, eps_abs)

  double max_drift() const;
};

CasimirDriftReport casimir_drift(const std::string& name,
                                 const RunResult& run, double eps_abs = -1.0);

/// Residual norms of the functional determining equations evaluated on one
/// state. mass/entropy are the steady-advection pair for the momentum
/// variational derivative, gauge is the 1-form-drag condition, and momentum
/// is the main combination
///   M^k grad C_{M^k} + rho (C_M.grad) u
///   + rho grad C_rho + sigma grad C_sigma + A div(C_A) + B x C_A.
/// Catalog entries have C_M = 0 so the first three vanish identically; the
/// negative control "control_rhou2" (int rho |u|^2) does not satisfy any.
struct CasimirDeterminingResiduals {
  double mass_l2 = 0.0;
  double entropy_l2 = 0.0;
  double gauge_l2 = 0.0;
  double momentum_l2 = 0.0;
  double momentum_linf = 0.0;
};

CasimirDeterminingResiduals casimir_determining_residuals(
    const std::string& name, const FluidState& fs);

}  // namespace hlab
