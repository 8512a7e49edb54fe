#include "hlab/noether.hpp"

#include <cmath>
#include <stdexcept>

namespace hlab {

const std::vector<CandidateInfo>& candidate_catalog() {
  static const std::vector<CandidateInfo> cat = {
      {"sym_cross_helicity", true,
       "Vhat=B/rho with gauge density r B.grad S; yields the nonlocal cross "
       "helicity law"},
      {"sym_helicity", true,
       "Vhat=Omega/rho with gauge density r Omega.grad S; yields the "
       "nonlocal helicity law"},
      {"sym_energy", true,
       "Vhat=u with the Lagrangian density as gauge; yields the energy law"},
      {"sym_energy_label", true,
       "Vhat=u variant carrying an advected label f; adds the rho f "
       "advection law"},
      {"det_b_over_rho", false,
       "Vhat=B/rho, gauge-free; passes the four determining equations"},
      {"det_zeta_omega", false,
       "Vhat=zeta omega/rho (barotropic, omega.grad zeta=0), gauge-free"},
  };
  return cat;
}

namespace {

VectorField b_over_rho(const FluidState& fs) {
  VectorField v = fs.B;
  for (int c = 0; c < 3; ++c)
    for (std::size_t q = 0; q < fs.rho.values.size(); ++q)
      v.comp[c].values[q] /= fs.rho.values[q];
  return v;
}

ScalarField lagrangian_density(const FluidState& fs, const ThermoFields& th) {
  ScalarField L = norm2(fs.u);
  for (std::size_t q = 0; q < L.values.size(); ++q) {
    L.values[q] = 0.5 * fs.rho.values[q] * L.values[q] - th.eps.values[q] -
                  0.5 * (fs.B.comp[0].values[q] * fs.B.comp[0].values[q] +
                         fs.B.comp[1].values[q] * fs.B.comp[1].values[q] +
                         fs.B.comp[2].values[q] * fs.B.comp[2].values[q]);
  }
  if (fs.has_Phi)
    for (std::size_t q = 0; q < L.values.size(); ++q)
      L.values[q] -= fs.rho.values[q] * fs.Phi.values[q];
  return L;
}

}  // namespace

SymmetryCandidate build_candidate(const std::string& name,
                                  const Snapshot& snap,
                                  const EquationOfState& eos) {
  const FluidState& fs = snap.fluid;
  const Grid& g = fs.grid();
  SymmetryCandidate c;
  c.name = name;

  if (name == "sym_cross_helicity" || name == "det_b_over_rho") {
    c.Vhat = b_over_rho(fs);
    if (name == "det_b_over_rho") {
      c.Lambda0 = ScalarField(g);
      c.LambdaFlux = VectorField(g);
      return c;
    }
    c.gauge = true;
    c.Lambda0 = multiply(snap.clebsch.r, dot(fs.B, grad(fs.S)));
    c.LambdaFlux = scale(fs.u, c.Lambda0);
    return c;
  }

  if (name == "sym_helicity") {
    const GeneralizedVorticity gv = generalized_vorticity(snap.clebsch, fs);
    c.Vhat = gv.Omega;
    for (int cc = 0; cc < 3; ++cc)
      for (std::size_t q = 0; q < fs.rho.values.size(); ++q)
        c.Vhat.comp[cc].values[q] /= fs.rho.values[q];
    c.gauge = true;
    c.Lambda0 = multiply(snap.clebsch.r, dot(gv.Omega, grad(fs.S)));
    c.LambdaFlux = scale(fs.u, c.Lambda0);
    return c;
  }

  if (name == "sym_energy" || name == "sym_energy_label") {
    const ThermoFields th = eval_thermo(eos, fs.rho, fs.S);
    c.Vhat = fs.u;
    c.gauge = true;
    c.Lambda0 = -1.0 * lagrangian_density(fs, th);
    c.LambdaFlux = VectorField(g);
    if (name == "sym_energy_label") {
      const auto it = snap.dragged.find("f_bgrads");
      if (it == snap.dragged.end())
        throw std::invalid_argument(
            "build_candidate: sym_energy_label needs the dragged 'f_bgrads'");
      const ScalarField& f = it->second.scalar;
      const ScalarField rf = multiply(fs.rho, f);
      c.Lambda0 -= rf;
      c.LambdaFlux = scale(fs.u, -1.0 * rf);
    }
    return c;
  }

  if (name == "det_zeta_omega") {
    const auto it = snap.dragged.find("zeta");
    if (it == snap.dragged.end())
      throw std::invalid_argument(
          "build_candidate: det_zeta_omega needs the dragged 'zeta'");
    const VectorField omega = curl(fs.u);
    c.Vhat = scale(omega, it->second.scalar);
    for (int cc = 0; cc < 3; ++cc)
      for (std::size_t q = 0; q < fs.rho.values.size(); ++q)
        c.Vhat.comp[cc].values[q] /= fs.rho.values[q];
    c.Lambda0 = ScalarField(g);
    c.LambdaFlux = VectorField(g);
    return c;
  }

  throw std::invalid_argument("build_candidate: unknown candidate '" + name +
                              "'");
}

namespace {

struct TimeStencil5 {
  std::array<int, 5> idx;
  std::array<double, 5> w;
};

TimeStencil5 stencil_at(std::size_t i, std::size_t n) {
  if (n < 5)
    throw std::invalid_argument(
        "noether: need >= 5 snapshots for time derivatives");
  TimeStencil5 s;
  const int ni = static_cast<int>(n), ii = static_cast<int>(i);
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
  } else {
    s.idx = {ni - 5, ni - 4, ni - 3, ni - 2, ni - 1};
    s.w = {3.0 / 12, -16.0 / 12, 36.0 / 12, -48.0 / 12, 25.0 / 12};
  }
  return s;
}

/// dVhat/dt - Vhat.grad u at snapshot i (advective derivative from the
/// series plus the stretching term).
VectorField dragged_vector_residual(const std::string& name,
                                    const RunResult& run, std::size_t i) {
  const TimeStencil5 st = stencil_at(i, run.snaps.size());
  const FluidState& fs = run.snaps[i].fluid;
  const SymmetryCandidate here = build_candidate(name, run.snaps[i], run.eos);

  VectorField res(run.grid);
  for (int m = 0; m < 5; ++m) {
    const SymmetryCandidate cm =
        build_candidate(name, run.snaps[st.idx[m]], run.eos);
    res.axpy(st.w[m] / run.out_dt, cm.Vhat);
  }
  res += advect_vector(fs.u, here.Vhat);          // u.grad Vhat
  res -= advect_vector(here.Vhat, fs.u);          // Vhat.grad u
  return res;
}

}  // namespace

ScalarField symmetry_residual(const std::string& name, const RunResult& run,
                              std::size_t i) {
  const TimeStencil5 st = stencil_at(i, run.snaps.size());
  const FluidState& fs = run.snaps[i].fluid;
  const ThermoFields th = eval_thermo(run.eos, fs.rho, fs.S);
  const SymmetryCandidate here = build_candidate(name, run.snaps[i], run.eos);

  // div(rho Vhat) (h + Phi - |u|^2/2)
  ScalarField head = th.h;
  {
    ScalarField k = norm2(fs.u);
    head.axpy(-0.5, k);
  }
  if (fs.has_Phi) head += fs.Phi;
  ScalarField res = multiply(div(scale(here.Vhat, fs.rho)), head);

  // rho T Vhat.grad S
  res += multiply(fs.rho, multiply(th.T, dot(here.Vhat, grad(fs.S))));

  // rho u.(dVhat/dt - Vhat.grad u)
  {
    const VectorField dv = dragged_vector_residual(name, run, i);
    res += multiply(fs.rho, dot(fs.u, dv));
  }

  // B.(-curl(Vhat x B) + Vhat div B)
  {
    VectorField mterm = -1.0 * curl(cross(here.Vhat, fs.B));
    const ScalarField divB = div(fs.B);
    for (int c = 0; c < 3; ++c)
      for (std::size_t q = 0; q < divB.values.size(); ++q)
        mterm.comp[c].values[q] +=
            here.Vhat.comp[c].values[q] * divB.values[q];
    res += dot(fs.B, mterm);
  }

  // dLambda0/dt + div(LambdaFlux)
  for (int m = 0; m < 5; ++m) {
    const SymmetryCandidate cm =
        build_candidate(name, run.snaps[st.idx[m]], run.eos);
    res.axpy(st.w[m] / run.out_dt, cm.Lambda0);
  }
  res += div(here.LambdaFlux);
  return res;
}

ConservedPair noether_pair(const SymmetryCandidate& c, const FluidState& fs,
                           const EquationOfState& eos) {
  const ThermoFields th = eval_thermo(eos, fs.rho, fs.S);
  ConservedPair out;
  out.name = c.name;

  out.F0 = dot(c.Vhat, scale(fs.u, fs.rho));
  out.F0 += c.Lambda0;

  const ScalarField L = lagrangian_density(fs, th);
  const ScalarField B2 = norm2(fs.B);
  out.flux = VectorField(fs.grid());
  for (int j = 0; j < 3; ++j) {
    ScalarField fj(fs.grid());
    for (std::size_t q = 0; q < fj.values.size(); ++q) {
      const double iso =
          th.p.values[q] + 0.5 * B2.values[q] - L.values[q];
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) {
        double Tjk = fs.rho.values[q] * fs.u.comp[j].values[q] *
                         fs.u.comp[k].values[q] -
                     fs.B.comp[j].values[q] * fs.B.comp[k].values[q];
        if (j == k) Tjk += iso;
        acc += c.Vhat.comp[k].values[q] * Tjk;
      }
      fj.values[q] = acc + c.LambdaFlux.comp[j].values[q];
    }
    out.flux.comp[j] = std::move(fj);
  }
  return out;
}

DeterminingResiduals relabel_determining_residuals(const std::string& name,
                                                   const RunResult& run,
                                                   std::size_t i) {
  const FluidState& fs = run.snaps[i].fluid;
  const SymmetryCandidate c = build_candidate(name, run.snaps[i], run.eos);

  const ScalarField r1 = div(scale(c.Vhat, fs.rho));
  const ScalarField r2 = dot(c.Vhat, grad(fs.S));
  const VectorField r3 = curl(cross(c.Vhat, fs.B));
  const VectorField r4 = dragged_vector_residual(name, run, i);

  DeterminingResiduals out;
  out.l2 = {l2(r1), l2(r2), l2(r3), l2(r4)};
  out.linf = {linf(r1), linf(r2), linf(r3), linf(r4)};
  return out;
}

ScalarField bianchi_vorticity_residual(const RunResult& run, std::size_t i) {
  if (!run.eos.is_barotropic())
    throw std::invalid_argument(
        "bianchi_vorticity_residual: needs a barotropic run");
  const TimeStencil5 st = stencil_at(i, run.snaps.size());
  const FluidState& fs = run.snaps[i].fluid;
  const VectorField omega = curl(fs.u);
  VectorField res = -1.0 * curl(cross(fs.u, omega));
  for (int m = 0; m < 5; ++m)
    res.axpy(st.w[m] / run.out_dt, curl(run.snaps[st.idx[m]].fluid.u));
  ScalarField mag = norm2(res);
  for (auto& v : mag.values) v = std::sqrt(v);
  return mag;
}

ScalarField bianchi_cross_helicity_residual(const RunResult& run,
                                            std::size_t i) {
  return pointwise_residual("cross_helicity_local", run, i);
}

ScalarField bianchi_ertel_residual(const RunResult& run, std::size_t i) {
  const TimeStencil5 st = stencil_at(i, run.snaps.size());
  const FluidState& fs = run.snaps[i].fluid;
  auto q_of = [](const FluidState& f) {
    ScalarField q = dot(curl(f.u), grad(f.S));
    for (std::size_t m = 0; m < q.values.size(); ++m)
      q.values[m] /= f.rho.values[m];
    return q;
  };
  ScalarField res = advect(fs.u, q_of(fs));
  for (int m = 0; m < 5; ++m)
    res.axpy(st.w[m] / run.out_dt, q_of(run.snaps[st.idx[m]].fluid));
  return res;
}

}  // namespace hlab
