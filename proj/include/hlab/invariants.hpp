#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlab/run.hpp"

namespace hlab {

/// Conserved density F0 and flux F of one balance law, assembled from
/// instantaneous fields (plus the nonlocal potentials where needed).
struct ConservedPair {
  std::string name;
  ScalarField F0;
  VectorField flux;
};

struct CheckInfo {
  std::string name;
  bool needs_clebsch;
  bool needs_A;
  std::string description;
};

const std::vector<CheckInfo>& check_catalog();

/// Assemble the named pair. Nonlocal laws need cs; the advected-gauge
/// magnetic law needs fs.A; label advection needs the advected label field.
/// Throws std::invalid_argument naming any missing requirement.
ConservedPair density_flux(const std::string& name, const FluidState& fs,
                           const ClebschState* cs, const EquationOfState& eos,
                           const ScalarField* label_f = nullptr);

/// Same, resolving label fields from the snapshot's dragged objects
/// (label_advection:bgrads -> "f_bgrads", label_advection:adotb -> "f_adotb").
ConservedPair density_flux(const std::string& name, const Snapshot& snap,
                           const EquationOfState& eos);

/// Raw-gauge magnetic helicity variant with the explicit electrostatic
/// potential term, phi_E = u.A in the advected gauge; used as a cross-check
/// against magnetic_helicity_gauge.
ConservedPair magnetic_helicity_raw(const FluidState& fs);

/// d F0/dt + div F evaluated at snapshot index i; the time derivative uses
/// 4th-order stencils over the stored series (one-sided near the ends).
/// Needs >= 5 snapshots.
ScalarField pointwise_residual(const std::string& name, const RunResult& run,
                               std::size_t i);

/// | dA/dt + grad(u.A) - u x B | pointwise at snapshot i: how well the
/// advected gauge reproduces the ideal electric field.
ScalarField electric_gauge_residual(const RunResult& run, std::size_t i);

struct ConservationReport {
  std::string name;
  std::vector<double> times;
  std::vector<double> integral;
  std::vector<double> res_l2;
  std::vector<double> res_linf;
  /// int |F0| at t=0: the natural magnitude when the signed integral
  /// cancels to near zero
  double abs_scale = 0.0;
  std::optional<double> convergence_order;

  double max_res_l2() const;
  double max_res_linf() const;
  /// max_t |I(t) - I(0)| / max(|I(0)|, abs_scale, eps_abs)
  double integral_drift(double eps_abs = 1e-12) const;
};

ConservationReport residual_report(const std::string& name,
                                   const RunResult& run);

/// Fits the observed order of a per-resolution error metric; h is the grid
/// spacing used at each resolution.
double fitted_order(const std::vector<double>& h,
                    const std::vector<double>& metric);

/// 4th-order derivative of a uniformly sampled series (spacing tau),
/// one-sided at the ends: the same stencils the field residuals use.
std::vector<double> time_derivative_series(const std::vector<double>& series,
                                           double tau);

// sources for the transport (non-conservative) forms, used by controls:
/// T (omega.grad S) + u.(grad T x grad S)
ScalarField fluid_helicity_source(const FluidState& fs,
                                  const EquationOfState& eos);
/// T B.grad S
ScalarField cross_helicity_source(const FluidState& fs,
                                  const EquationOfState& eos);

}  // namespace hlab
