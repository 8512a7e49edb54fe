#include "hlab/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hlab {

EquationOfState EquationOfState::ideal(double gamma, double K, double c_v) {
  if (gamma <= 1.0 || K <= 0.0 || c_v <= 0.0)
    throw std::invalid_argument("EquationOfState: need gamma>1, K>0, c_v>0");
  EquationOfState e;
  e.kind = Kind::IdealGamma;
  e.gamma = gamma;
  e.K = K;
  e.c_v = c_v;
  return e;
}

EquationOfState EquationOfState::barotropic(double gamma, double K) {
  if (gamma <= 1.0 || K <= 0.0)
    throw std::invalid_argument("EquationOfState: need gamma>1, K>0");
  EquationOfState e;
  e.kind = Kind::Barotropic;
  e.gamma = gamma;
  e.K = K;
  return e;
}

void EquationOfState::evaluate(double rho, double S, double& eps, double& p,
                               double& T, double& h) const {
  const double ent = is_barotropic() ? 1.0 : std::exp(S / c_v);
  eps = K * std::pow(rho, gamma) * ent / (gamma - 1.0);
  p = (gamma - 1.0) * eps;
  h = gamma * eps / rho;
  T = is_barotropic() ? 0.0 : eps / (rho * c_v);
}

double EquationOfState::sound_speed2(double rho, double S) const {
  double eps, p, T, h;
  evaluate(rho, S, eps, p, T, h);
  return gamma * p / rho;
}

ThermoFields eval_thermo(const EquationOfState& eos, const ScalarField& rho,
                         const ScalarField& S) {
  require_same_grid(rho.grid, S.grid, "eval_thermo");
  ThermoFields out{ScalarField(rho.grid), ScalarField(rho.grid),
                   ScalarField(rho.grid), ScalarField(rho.grid)};
  for (std::size_t q = 0; q < rho.values.size(); ++q) {
    const double r = rho.values[q];
    if (!(r > 0.0))
      throw std::domain_error("eval_thermo: rho <= 0 at flat index " +
                              std::to_string(q));
    eos.evaluate(r, S.values[q], out.eps.values[q], out.p.values[q],
                 out.T.values[q], out.h.values[q]);
  }
  return out;
}

double first_law_residual(const EquationOfState& eos, const ScalarField& rho,
                          const ScalarField& S) {
  const ThermoFields th = eval_thermo(eos, rho, S);
  const VectorField gp = grad(th.p);
  const VectorField gS = grad(S);
  const VectorField gh = grad(th.h);
  double m = 0.0;
  for (int c = 0; c < 3; ++c)
    for (std::size_t q = 0; q < rho.values.size(); ++q) {
      const double r = gp.comp[c].values[q] / rho.values[q] +
                       th.T.values[q] * gS.comp[c].values[q] -
                       gh.comp[c].values[q];
      m = std::max(m, std::abs(r));
    }
  return m;
}

}  // namespace hlab
