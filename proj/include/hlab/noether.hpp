#pragma once

#include <array>
#include <string>
#include <vector>

#include "hlab/invariants.hpp"
#include "hlab/run.hpp"

namespace hlab {

/// A relabeling-symmetry candidate in canonical (evolutionary) form, with
/// the gauge density/flux that makes its action variation a pure divergence.
struct SymmetryCandidate {
  std::string name;
  VectorField Vhat;
  ScalarField Lambda0;
  VectorField LambdaFlux;
  bool gauge = false;  // true: certified via the divergence-symmetry residual
};

struct CandidateInfo {
  std::string name;
  bool gauge;
  std::string description;
};

const std::vector<CandidateInfo>& candidate_catalog();

/// Builds the named candidate from one snapshot:
///   sym_cross_helicity : Vhat = B/rho,     L0 = r B.grad S,      L = u L0
///   sym_helicity       : Vhat = Omega/rho, L0 = r Omega.grad S,  L = u L0
///   sym_energy         : Vhat = u,         L0 = -Lagrangian,     L = 0
///   sym_energy_label   : as sym_energy with L0 -= rho f, L = -rho u f,
///                        f taken from the dragged 0-form "f_bgrads"
///   det_b_over_rho     : Vhat = B/rho, no gauge terms
///   det_zeta_omega     : Vhat = zeta omega/rho (zeta from dragged "zeta")
SymmetryCandidate build_candidate(const std::string& name,
                                  const Snapshot& snap,
                                  const EquationOfState& eos);

/// Divergence-symmetry condition evaluated pointwise at snapshot i:
///   div(rho Vhat)(h + Phi - |u|^2/2) + rho T Vhat.grad S
///   + rho u.(dVhat/dt - Vhat.grad u) + B.(-curl(Vhat x B) + Vhat div B)
///   + dL0/dt + div(LambdaFlux)
/// Time derivatives come from the stored snapshot series.
ScalarField symmetry_residual(const std::string& name, const RunResult& run,
                              std::size_t i);

/// Noether density/flux for the candidate, assembled literally from the
/// momentum-flux tensor minus the Lagrangian density:
///   F0  = Vhat.(rho u) + L0
///   F^j = Vhat^k (T^{jk} - L d^{jk}) + Lambda^j
ConservedPair noether_pair(const SymmetryCandidate& c, const FluidState& fs,
                           const EquationOfState& eos);

/// The four relabeling determining residuals at snapshot i:
///   r1 = div(rho Vhat), r2 = Vhat.grad S, r3 = curl(Vhat x B),
///   r4 = dVhat/dt - Vhat.grad u
struct DeterminingResiduals {
  std::array<double, 4> l2{};
  std::array<double, 4> linf{};
};

DeterminingResiduals relabel_determining_residuals(const std::string& name,
                                                   const RunResult& run,
                                                   std::size_t i);

/// Second-theorem identities with the Euler-Lagrange factor taken as
/// satisfied by the solver.
/// |d omega/dt - curl(u x omega)|; requires a barotropic run.
ScalarField bianchi_vorticity_residual(const RunResult& run, std::size_t i);
/// d(u.B)/dt + div[u(u.B) + (h - |u|^2/2) B]; meaningful when B.grad S = 0.
ScalarField bianchi_cross_helicity_residual(const RunResult& run,
                                            std::size_t i);
/// dq/dt + u.grad q for q = curl(u).grad S / rho.
ScalarField bianchi_ertel_residual(const RunResult& run, std::size_t i);

}  // namespace hlab
