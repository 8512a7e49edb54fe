#include <doctest.h>

#include <cmath>

#include "hlab/thermo.hpp"
#include "test_helpers.hpp"

using namespace hlab;

TEST_CASE("ideal-gamma closed forms") {
  const Grid g = Grid::make(3, {8, 8, 8});
  const EquationOfState eos = EquationOfState::ideal(5.0 / 3.0, 1.0, 1.0);
  const ThermoFields th = eval_thermo(eos, ScalarField(g, 1.0), ScalarField(g));
  CHECK(th.eps.values[0] == doctest::Approx(1.5));
  CHECK(th.p.values[0] == doctest::Approx(1.0));
  CHECK(th.h.values[0] == doctest::Approx(2.5));
  CHECK(th.T.values[0] == doctest::Approx(1.5));
}

TEST_CASE("barotropic closed forms") {
  const Grid g = Grid::make(3, {8, 8, 8});
  const EquationOfState eos = EquationOfState::barotropic(2.0, 1.0);
  // entropy must be ignored entirely
  const ThermoFields th =
      eval_thermo(eos, ScalarField(g, 2.0), ScalarField(g, 0.7));
  CHECK(th.p.values[0] == doctest::Approx(4.0));
  CHECK(th.h.values[0] == doctest::Approx(4.0));
  CHECK(th.T.values[0] == 0.0);
}

TEST_CASE("p = (gamma-1) eps identically") {
  const Grid g = Grid::make(3, {16, 16, 16});
  const EquationOfState eos = EquationOfState::ideal(1.4, 0.8, 2.0);
  const ScalarField rho = hlab_test::random_scalar(g, 5, 0.3, 1.0);
  const ScalarField S = hlab_test::random_scalar(g, 6, 0.3, 0.0);
  const ThermoFields th = eval_thermo(eos, rho, S);
  for (std::size_t q = 0; q < g.size(); q += 97)
    CHECK(th.p.values[q] ==
          doctest::Approx((eos.gamma - 1.0) * th.eps.values[q]));
}

TEST_CASE("rho <= 0 raises a domain error naming the index") {
  const Grid g = Grid::make(3, {8, 8, 8});
  ScalarField rho(g, 1.0);
  rho.values[42] = -0.5;
  const EquationOfState eos = EquationOfState::ideal();
  try {
    eval_thermo(eos, rho, ScalarField(g));
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("42") != std::string::npos);
  }
}

TEST_CASE("first law residual: constants give zero") {
  const Grid g = Grid::make(3, {16, 16, 16});
  const EquationOfState eos = EquationOfState::ideal();
  CHECK(first_law_residual(eos, ScalarField(g, 1.3), ScalarField(g, 0.2)) <
        1e-13);
}

TEST_CASE("first law residual converges at order >= 3.9") {
  const EquationOfState eos = EquationOfState::ideal();
  double e[2];
  int i = 0;
  for (int n : {24, 48}) {
    const Grid g = Grid::make(3, {n, n, n});
    const ScalarField rho = sample(g, [](double x, double, double) {
      return 1.0 + 0.2 * std::sin(x);
    });
    const ScalarField S = sample(g, [](double, double y, double) {
      return 0.1 * std::cos(y);
    });
    e[i++] = first_law_residual(eos, rho, S);
  }
  CHECK(hlab_test::halving_order(e[0], e[1]) >= 3.9);
}

TEST_CASE("first law residual, barotropic branch") {
  const EquationOfState eos = EquationOfState::barotropic(1.4, 1.0);
  double e[2];
  int i = 0;
  for (int n : {24, 48}) {
    const Grid g = Grid::make(3, {n, n, n});
    const ScalarField rho = sample(g, [](double x, double, double) {
      return 1.0 + 0.2 * std::sin(x);
    });
    e[i++] = first_law_residual(eos, rho, ScalarField(g, 0.3));
  }
  CHECK(hlab_test::halving_order(e[0], e[1]) >= 3.9);
}
