#include "hlab/clebsch.hpp"

namespace hlab {

void apply_tangent(ClebschState& s, double a, const ClebschTangent& k) {
  s.phi.axpy(a, k.phi);
  s.r.axpy(a, k.r);
  s.lambda_t.axpy(a, k.lambda_t);
  s.mu.axpy(a, k.mu);
}

ClebschTangent clebsch_rhs(const ClebschState& cs, const FluidState& fs,
                           const EquationOfState& eos,
                           const ThermoFields* pre) {
  require_same_grid(cs.phi.grid, fs.rho.grid, "clebsch_rhs");
  const Grid& g = fs.grid();
  ClebschTangent out(g);
  const ThermoFields th = pre ? *pre : eval_thermo(eos, fs.rho, fs.S);

  out.phi = -1.0 * advect(fs.u, cs.phi);
  for (std::size_t q = 0; q < out.phi.values.size(); ++q) {
    const double u2 = fs.u.comp[0].values[q] * fs.u.comp[0].values[q] +
                      fs.u.comp[1].values[q] * fs.u.comp[1].values[q] +
                      fs.u.comp[2].values[q] * fs.u.comp[2].values[q];
    out.phi.values[q] += 0.5 * u2 - th.h.values[q];
  }

  out.r = -1.0 * advect(fs.u, cs.r);
  out.r -= th.T;

  out.lambda_t = -1.0 * advect(fs.u, cs.lambda_t);
  out.mu = -1.0 * advect(fs.u, cs.mu);
  return out;
}

GeneralizedVorticity generalized_vorticity(const ClebschState& cs,
                                           const FluidState& fs) {
  require_same_grid(cs.phi.grid, fs.rho.grid, "generalized_vorticity");
  GeneralizedVorticity out;
  out.w = fs.u - grad(cs.phi);
  const VectorField gS = grad(fs.S);
  out.w += scale(gS, cs.r);
  out.Omega = curl(out.w);
  return out;
}

double omega_identity_residual(const ClebschState& cs, const FluidState& fs) {
  const GeneralizedVorticity gv = generalized_vorticity(cs, fs);
  VectorField alt = curl(fs.u);
  alt += cross(grad(cs.r), grad(fs.S));
  alt -= curl(grad(cs.phi));
  alt -= gv.Omega;
  return linf(alt);
}

double clebsch_reconstruction_residual(const ClebschState& cs,
                                       const FluidState& fs) {
  VectorField rec = grad(cs.phi);
  rec -= scale(grad(fs.S), cs.r);
  rec -= scale(grad(cs.mu), cs.lambda_t);
  rec -= fs.u;
  return linf(rec);
}

}  // namespace hlab
