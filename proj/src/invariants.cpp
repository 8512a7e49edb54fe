#include "hlab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hlab {

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> cat = {
      {"energy", false, false,
       "total energy density and flux, including the Poynting term"},
      {"fluid_helicity_local", false, false,
       "u.curl(u) balance; conserved for a barotropic gas"},
      {"fluid_helicity_nonlocal", true, false,
       "generalized helicity built from the nonlocal potentials phi, r"},
      {"cross_helicity_local", false, false,
       "u.B balance; conserved when B.grad S = 0 or the gas is barotropic"},
      {"cross_helicity_nonlocal", true, false,
       "B.(u + r grad S) balance, conserved for any smooth ideal run"},
      {"magnetic_helicity_gauge", false, true,
       "A.B advection law in the advected gauge"},
      {"ertel_density", false, false,
       "potential vorticity density curl(u).grad S and its advective flux"},
      {"label_advection:bgrads", false, false,
       "advected label f = B.grad S / rho as a density rho*f"},
      {"label_advection:adotb", false, true,
       "advected label f = A.B / rho as a density rho*f"},
  };
  return cat;
}

namespace {

ScalarField half_u2(const FluidState& fs) {
  ScalarField k = norm2(fs.u);
  k *= 0.5;
  return k;
}

/// h - |u|^2/2
ScalarField bernoulli_head(const FluidState& fs, const ThermoFields& th) {
  ScalarField b = th.h;
  b -= half_u2(fs);
  return b;
}

VectorField advective_flux(const FluidState& fs, const ScalarField& F0) {
  return scale(fs.u, F0);
}

}  // namespace

ConservedPair density_flux(const std::string& name, const FluidState& fs,
                           const ClebschState* cs, const EquationOfState& eos,
                           const ScalarField* label_f) {
  const ThermoFields th = eval_thermo(eos, fs.rho, fs.S);
  ConservedPair out;
  out.name = name;

  if (name == "fluid_helicity_local") {
    const VectorField omega = curl(fs.u);
    out.F0 = dot(fs.u, omega);
    out.flux = advective_flux(fs, out.F0);
    out.flux += scale(omega, bernoulli_head(fs, th));
    return out;
  }

  if (name == "fluid_helicity_nonlocal") {
    if (!cs)
      throw std::invalid_argument(
          "density_flux: fluid_helicity_nonlocal needs the Clebsch state");
    const GeneralizedVorticity gv = generalized_vorticity(*cs, fs);
    VectorField m = fs.u;
    m += scale(grad(fs.S), cs->r);  // u + r grad S
    out.F0 = dot(gv.Omega, m);
    out.flux = advective_flux(fs, out.F0);
    out.flux += scale(gv.Omega, bernoulli_head(fs, th));
    return out;
  }

  if (name == "cross_helicity_local") {
    out.F0 = dot(fs.u, fs.B);
    out.flux = advective_flux(fs, out.F0);
    out.flux += scale(fs.B, bernoulli_head(fs, th));
    return out;
  }

  if (name == "cross_helicity_nonlocal") {
    if (!cs)
      throw std::invalid_argument(
          "density_flux: cross_helicity_nonlocal needs the Clebsch state");
    VectorField m = fs.u;
    m += scale(grad(fs.S), cs->r);
    out.F0 = dot(fs.B, m);
    out.flux = advective_flux(fs, out.F0);
    out.flux += scale(fs.B, bernoulli_head(fs, th));
    return out;
  }

  if (name == "magnetic_helicity_gauge") {
    if (!fs.has_A)
      throw std::invalid_argument(
          "density_flux: magnetic_helicity_gauge needs the vector potential");
    out.F0 = dot(fs.A, fs.B);
    out.flux = advective_flux(fs, out.F0);
    return out;
  }

  if (name == "energy") {
    out.F0 = half_u2(fs);
    for (std::size_t q = 0; q < out.F0.values.size(); ++q)
      out.F0.values[q] = fs.rho.values[q] * out.F0.values[q] +
                         th.eps.values[q] +
                         0.5 * (fs.B.comp[0].values[q] * fs.B.comp[0].values[q] +
                                fs.B.comp[1].values[q] * fs.B.comp[1].values[q] +
                                fs.B.comp[2].values[q] * fs.B.comp[2].values[q]);
    if (fs.has_Phi)
      for (std::size_t q = 0; q < out.F0.values.size(); ++q)
        out.F0.values[q] += fs.rho.values[q] * fs.Phi.values[q];

    // rho u (|u|^2/2 + h + Phi) + E x B, E = -(u x B)
    ScalarField head = half_u2(fs);
    head += th.h;
    if (fs.has_Phi) head += fs.Phi;
    out.flux = scale(scale(fs.u, fs.rho), head);
    const ScalarField B2 = norm2(fs.B);
    const ScalarField uB = dot(fs.u, fs.B);
    for (int c = 0; c < 3; ++c)
      for (std::size_t q = 0; q < B2.values.size(); ++q)
        out.flux.comp[c].values[q] += fs.u.comp[c].values[q] * B2.values[q] -
                                      fs.B.comp[c].values[q] * uB.values[q];
    return out;
  }

  if (name == "ertel_density") {
    const VectorField omega = curl(fs.u);
    out.F0 = dot(omega, grad(fs.S));
    out.flux = advective_flux(fs, out.F0);
    return out;
  }

  if (name.rfind("label_advection", 0) == 0) {
    if (!label_f)
      throw std::invalid_argument(
          "density_flux: label_advection needs the advected label field");
    out.F0 = multiply(fs.rho, *label_f);
    out.flux = advective_flux(fs, out.F0);
    return out;
  }

  throw std::invalid_argument("density_flux: unknown check '" + name + "'");
}

ConservedPair density_flux(const std::string& name, const Snapshot& snap,
                           const EquationOfState& eos) {
  const ScalarField* f = nullptr;
  std::string key;
  if (name == "label_advection:bgrads") key = "f_bgrads";
  if (name == "label_advection:adotb") key = "f_adotb";
  if (!key.empty()) {
    const auto it = snap.dragged.find(key);
    if (it == snap.dragged.end())
      throw std::invalid_argument("density_flux: run carries no dragged '" +
                                  key + "' label for " + name);
    f = &it->second.scalar;
  }
  return density_flux(name, snap.fluid, &snap.clebsch, eos, f);
}

ConservedPair magnetic_helicity_raw(const FluidState& fs) {
  if (!fs.has_A)
    throw std::invalid_argument(
        "magnetic_helicity_raw: needs the vector potential");
  ConservedPair out;
  out.name = "magnetic_helicity_raw";
  out.F0 = dot(fs.A, fs.B);
  out.flux = scale(fs.u, out.F0);
  // the raw flux carries B (phi_E - A.u); in the advected gauge phi_E = u.A
  // and the term cancels, which electric_gauge_residual verifies dynamically
  return out;
}

// ---------------------------------------------------------------------------
// time stencils over the snapshot series

namespace {

struct TimeStencil {
  std::array<int, 5> idx;
  std::array<double, 5> w;  // divide by tau when applying
};

TimeStencil time_stencil(std::size_t i, std::size_t n) {
  if (n < 5)
    throw std::invalid_argument(
        "residual: need >= 5 snapshots for the 4th-order time stencil");
  TimeStencil s;
  const int ni = static_cast<int>(n);
  const int ii = static_cast<int>(i);
  if (ii >= 2 && ii <= ni - 3) {
    s.idx = {ii - 2, ii - 1, ii, ii + 1, ii + 2};
    s.w = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
  } else if (ii == 0) {
    s.idx = {0, 1, 2, 3, 4};
    s.w = {-25.0 / 12, 48.0 / 12, -36.0 / 12, 16.0 / 12, -3.0 / 12};
  } else if (ii == 1) {
    s.idx = {0, 1, 2, 3, 4};
    s.w = {-3.0 / 12, -10.0 / 12, 18.0 / 12, -6.0 / 12, 1.0 / 12};
  } else if (ii == ni - 2) {
    s.idx = {ni - 5, ni - 4, ni - 3, ni - 2, ni - 1};
    s.w = {-1.0 / 12, 6.0 / 12, -18.0 / 12, 10.0 / 12, 3.0 / 12};
  } else {  // ii == ni - 1
    s.idx = {ni - 5, ni - 4, ni - 3, ni - 2, ni - 1};
    s.w = {3.0 / 12, -16.0 / 12, 36.0 / 12, -48.0 / 12, 25.0 / 12};
  }
  return s;
}

}  // namespace

std::vector<double> time_derivative_series(const std::vector<double>& series,
                                           double tau) {
  std::vector<double> out(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    const TimeStencil s = time_stencil(i, series.size());
    double acc = 0.0;
    for (int m = 0; m < 5; ++m) acc += s.w[m] * series[s.idx[m]];
    out[i] = acc / tau;
  }
  return out;
}

ScalarField electric_gauge_residual(const RunResult& run, std::size_t i) {
  const std::size_t n = run.snaps.size();
  const TimeStencil st = time_stencil(i, n);
  const FluidState& fs = run.snaps[i].fluid;
  if (!fs.has_A)
    throw std::invalid_argument("electric_gauge_residual: run carries no A");
  // dA/dt + grad(phi_E) - u x B with phi_E = u.A; zero at scheme order iff
  // the advected gauge reproduces E = -(u x B)
  VectorField res = grad(dot(fs.u, fs.A));
  res -= cross(fs.u, fs.B);
  for (int m = 0; m < 5; ++m)
    res.axpy(st.w[m] / run.out_dt, run.snaps[st.idx[m]].fluid.A);
  ScalarField mag = norm2(res);
  for (auto& v : mag.values) v = std::sqrt(v);
  return mag;
}

ScalarField pointwise_residual(const std::string& name, const RunResult& run,
                               std::size_t i) {
  const std::size_t n = run.snaps.size();
  const TimeStencil st = time_stencil(i, n);
  ScalarField dt_term(run.grid);
  for (int m = 0; m < 5; ++m) {
    const ConservedPair p =
        density_flux(name, run.snaps[st.idx[m]], run.eos);
    dt_term.axpy(st.w[m] / run.out_dt, p.F0);
  }
  const ConservedPair here = density_flux(name, run.snaps[i], run.eos);
  ScalarField res = div(here.flux);
  res += dt_term;
  return res;
}

double ConservationReport::max_res_l2() const {
  return res_l2.empty() ? 0.0 : *std::max_element(res_l2.begin(), res_l2.end());
}
double ConservationReport::max_res_linf() const {
  return res_linf.empty() ? 0.0
                          : *std::max_element(res_linf.begin(), res_linf.end());
}
double ConservationReport::integral_drift(double eps_abs) const {
  if (integral.empty()) return 0.0;
  const double ref =
      std::max({std::abs(integral.front()), abs_scale, eps_abs});
  double m = 0.0;
  for (double v : integral) m = std::max(m, std::abs(v - integral.front()));
  return m / ref;
}

ConservationReport residual_report(const std::string& name,
                                   const RunResult& run) {
  const std::size_t n = run.snaps.size();
  if (n < 5)
    throw std::invalid_argument(
        "residual_report: need >= 5 snapshots, have " + std::to_string(n));

  // cache F0 series once, fluxes per snapshot
  std::vector<ScalarField> F0(n);
  std::vector<VectorField> flux(n);
  for (std::size_t i = 0; i < n; ++i) {
    ConservedPair p = density_flux(name, run.snaps[i], run.eos);
    F0[i] = std::move(p.F0);
    flux[i] = std::move(p.flux);
  }

  ConservationReport rep;
  rep.name = name;
  {
    ScalarField mag = F0[0];
    for (auto& v : mag.values) v = std::abs(v);
    rep.abs_scale = integrate(mag);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const TimeStencil st = time_stencil(i, n);
    ScalarField res = div(flux[i]);
    for (int m = 0; m < 5; ++m) res.axpy(st.w[m] / run.out_dt, F0[st.idx[m]]);
    rep.times.push_back(run.snaps[i].t);
    rep.integral.push_back(integrate(F0[i]));
    rep.res_l2.push_back(l2(res));
    rep.res_linf.push_back(linf(res));
  }
  return rep;
}

double fitted_order(const std::vector<double>& h,
                    const std::vector<double>& metric) {
  return fit_order(h, metric);
}

ScalarField fluid_helicity_source(const FluidState& fs,
                                  const EquationOfState& eos) {
  const ThermoFields th = eval_thermo(eos, fs.rho, fs.S);
  const VectorField omega = curl(fs.u);
  const VectorField gS = grad(fs.S);
  const VectorField gT = grad(th.T);
  ScalarField src = multiply(th.T, dot(omega, gS));
  src += dot(fs.u, cross(gT, gS));
  return src;
}

ScalarField cross_helicity_source(const FluidState& fs,
                                  const EquationOfState& eos) {
  const ThermoFields th = eval_thermo(eos, fs.rho, fs.S);
  return multiply(th.T, dot(fs.B, grad(fs.S)));
}

}  // namespace hlab
