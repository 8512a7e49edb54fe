#pragma once

#include "hlab/field.hpp"

namespace hlab {

/// Internal energy density eps(rho,S) = K rho^gamma exp(S/c_v) / (gamma-1)
/// (the exp factor dropped for the barotropic branch). This closure makes
/// p = (gamma-1) eps, h = gamma eps / rho, T = eps / (rho c_v) closed-form,
/// and -grad(p)/rho = T grad(S) - grad(h) an exact identity, so residuals of
/// the latter isolate discretization error.
struct EquationOfState {
  enum class Kind { IdealGamma, Barotropic };

  Kind kind = Kind::IdealGamma;
  double gamma = 5.0 / 3.0;
  double K = 1.0;
  double c_v = 1.0;

  static EquationOfState ideal(double gamma = 5.0 / 3.0, double K = 1.0,
                               double c_v = 1.0);
  static EquationOfState barotropic(double gamma = 5.0 / 3.0, double K = 1.0);

  bool is_barotropic() const { return kind == Kind::Barotropic; }

  /// Pointwise evaluation; rho must be positive.
  void evaluate(double rho, double S, double& eps, double& p, double& T,
                double& h) const;

  /// Adiabatic sound speed squared, gamma*p/rho.
  double sound_speed2(double rho, double S) const;
};

struct ThermoFields {
  ScalarField eps;
  ScalarField p;
  ScalarField T;
  ScalarField h;
};

/// Throws std::domain_error naming the first offending flat index if
/// rho <= 0 anywhere.
ThermoFields eval_thermo(const EquationOfState& eos, const ScalarField& rho,
                         const ScalarField& S);

/// || grad(p)/rho + T grad(S) - grad(h) ||_inf, all gradients discrete.
double first_law_residual(const EquationOfState& eos, const ScalarField& rho,
                          const ScalarField& S);

}  // namespace hlab
