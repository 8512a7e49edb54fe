#include "hlab/lagrangian.hpp"

#include <cmath>

#include "hlab/errors.hpp"
#include <random>
#include <stdexcept>

namespace hlab {

namespace {

struct AxisStencil {
  int idx[4];
  double w[4];
};

// Lagrange basis on local nodes {-1,0,1,2} at offset xi in [0,1)
inline void cubic_weights(double xi, double* w) {
  w[0] = -xi * (xi - 1.0) * (xi - 2.0) / 6.0;
  w[1] = (xi + 1.0) * (xi - 1.0) * (xi - 2.0) / 2.0;
  w[2] = -(xi + 1.0) * xi * (xi - 2.0) / 2.0;
  w[3] = (xi + 1.0) * xi * (xi - 1.0) / 6.0;
}

inline AxisStencil axis_stencil(const Grid& g, int axis, double pos) {
  AxisStencil s;
  if (g.n[axis] == 1) {
    s.idx[0] = 0;
    s.w[0] = 1.0;
    s.idx[1] = s.idx[2] = s.idx[3] = 0;
    s.w[1] = s.w[2] = s.w[3] = 0.0;
    return s;
  }
  const int n = g.n[axis];
  const double L = g.length[axis];
  double xw = pos - L * std::floor(pos / L);
  double cell = std::floor(xw / g.dx[axis]);
  if (cell >= n) cell = 0, xw = 0.0;  // rounding guard at the seam
  const double xi = xw / g.dx[axis] - cell;
  const int c = static_cast<int>(cell);
  for (int m = 0; m < 4; ++m) s.idx[m] = (c + m - 1 + n) % n;
  cubic_weights(xi, s.w);
  return s;
}

}  // namespace

double interp_scalar(const ScalarField& f, const Vec3& pos) {
  const Grid& g = f.grid;
  const AxisStencil sx = axis_stencil(g, 0, pos[0]);
  const AxisStencil sy = axis_stencil(g, 1, pos[1]);
  const AxisStencil sz = axis_stencil(g, 2, pos[2]);
  const int mz = g.n[2] == 1 ? 1 : 4;
  const int my = g.n[1] == 1 ? 1 : 4;
  const int mx = g.n[0] == 1 ? 1 : 4;
  double acc = 0.0;
  for (int kz = 0; kz < mz; ++kz)
    for (int ky = 0; ky < my; ++ky)
      for (int kx = 0; kx < mx; ++kx)
        acc += sz.w[kz] * sy.w[ky] * sx.w[kx] *
               f(sx.idx[kx], sy.idx[ky], sz.idx[kz]);
  return acc;
}

Vec3 interp_vector(const VectorField& v, const Vec3& pos) {
  return {interp_scalar(v.comp[0], pos), interp_scalar(v.comp[1], pos),
          interp_scalar(v.comp[2], pos)};
}

double det3(const Mat3& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

std::vector<double> TracerCloud::jacobian() const {
  std::vector<double> J(size());
  for (std::size_t p = 0; p < size(); ++p) J[p] = det3(F[p]);
  return J;
}

TracerCloud seed_tracers(const FluidState& fs, const ClebschState& cs,
                         int count, std::uint64_t seed) {
  const Grid& g = fs.grid();
  TracerCloud tc;
  tc.grid = g;
  const int dims = g.dims;
  int m = static_cast<int>(std::ceil(std::pow(double(count), 1.0 / dims)));
  if (m < 1) m = 1;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);

  const double hx = g.length[0] / m;
  const double hy = g.length[1] / m;
  const double hz = dims == 3 ? g.length[2] / m : 0.0;
  for (int kz = 0; kz < (dims == 3 ? m : 1) && (int)tc.x0.size() < count; ++kz)
    for (int ky = 0; ky < m && (int)tc.x0.size() < count; ++ky)
      for (int kx = 0; kx < m && (int)tc.x0.size() < count; ++kx) {
        Vec3 p{(kx + 0.5 + jitter(rng)) * hx, (ky + 0.5 + jitter(rng)) * hy,
               dims == 3 ? (kz + 0.5 + jitter(rng)) * hz : 0.0};
        tc.x0.push_back(p);
      }
  tc.x = tc.x0;
  tc.F.assign(tc.x.size(), Mat3{1, 0, 0, 0, 1, 0, 0, 0, 1});

  const std::size_t np = tc.size();
  auto& S0 = tc.carried["S0"];
  auto& rho0 = tc.carried["rho0"];
  auto& q0 = tc.carried["q0"];
  auto& B0x = tc.carried["B0x"];
  auto& B0y = tc.carried["B0y"];
  auto& B0z = tc.carried["B0z"];
  auto& r = tc.carried["r"];
  auto& phi = tc.carried["phi"];
  S0.resize(np);
  rho0.resize(np);
  q0.resize(np);
  B0x.resize(np);
  B0y.resize(np);
  B0z.resize(np);
  r.resize(np);
  phi.resize(np);

  const VectorField omega = curl(fs.u);
  const VectorField gS = grad(fs.S);
  ScalarField q = dot(omega, gS);
  for (std::size_t i = 0; i < q.values.size(); ++i)
    q.values[i] /= fs.rho.values[i];

  for (std::size_t p = 0; p < np; ++p) {
    S0[p] = interp_scalar(fs.S, tc.x0[p]);
    rho0[p] = interp_scalar(fs.rho, tc.x0[p]);
    q0[p] = interp_scalar(q, tc.x0[p]);
    const Vec3 b = interp_vector(fs.B, tc.x0[p]);
    B0x[p] = b[0];
    B0y[p] = b[1];
    B0z[p] = b[2];
    r[p] = interp_scalar(cs.r, tc.x0[p]);
    phi[p] = interp_scalar(cs.phi, tc.x0[p]);
  }
  return tc;
}

TracerTangent& TracerTangent::axpy(double a, const TracerTangent& o) {
  for (std::size_t p = 0; p < dx.size(); ++p)
    for (int c = 0; c < 3; ++c) dx[p][c] += a * o.dx[p][c];
  for (std::size_t p = 0; p < dF.size(); ++p)
    for (int c = 0; c < 9; ++c) dF[p][c] += a * o.dF[p][c];
  for (std::size_t p = 0; p < dr.size(); ++p) dr[p] += a * o.dr[p];
  for (std::size_t p = 0; p < dphi.size(); ++p) dphi[p] += a * o.dphi[p];
  return *this;
}

void apply_tangent(TracerCloud& tc, double a, const TracerTangent& k) {
  for (std::size_t p = 0; p < tc.x.size(); ++p)
    for (int c = 0; c < 3; ++c) tc.x[p][c] += a * k.dx[p][c];
  for (std::size_t p = 0; p < tc.F.size(); ++p)
    for (int c = 0; c < 9; ++c) tc.F[p][c] += a * k.dF[p][c];
  if (tc.has("r"))
    for (std::size_t p = 0; p < tc.x.size(); ++p)
      tc.carried["r"][p] += a * k.dr[p];
  if (tc.has("phi"))
    for (std::size_t p = 0; p < tc.x.size(); ++p)
      tc.carried["phi"][p] += a * k.dphi[p];
}

TracerStageFields make_stage_fields(const FluidState& fs,
                                    const EquationOfState& eos,
                                    const ThermoFields* pre) {
  TracerStageFields sf;
  sf.u = &fs.u;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sf.grad_u[3 * i + j] = deriv(fs.u.comp[i], j);
  const ThermoFields th = pre ? *pre : eval_thermo(eos, fs.rho, fs.S);
  sf.T = th.T;
  sf.bernoulli = norm2(fs.u);
  sf.bernoulli *= 0.5;
  sf.bernoulli -= th.h;
  return sf;
}

TracerTangent tracer_rhs(const TracerCloud& tc, const TracerStageFields& sf) {
  const std::size_t np = tc.size();
  TracerTangent out;
  out.dx.resize(np);
  out.dF.resize(np);
  out.dr.assign(np, 0.0);
  out.dphi.assign(np, 0.0);
  for (std::size_t p = 0; p < np; ++p) {
    const Vec3& pos = tc.x[p];
    out.dx[p] = interp_vector(*sf.u, pos);
    Mat3 G;
    for (int c = 0; c < 9; ++c) G[c] = interp_scalar(sf.grad_u[c], pos);
    const Mat3& F = tc.F[p];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        out.dF[p][3 * i + j] = G[3 * i + 0] * F[3 * 0 + j] +
                               G[3 * i + 1] * F[3 * 1 + j] +
                               G[3 * i + 2] * F[3 * 2 + j];
    out.dr[p] = -interp_scalar(sf.T, pos);
    out.dphi[p] = interp_scalar(sf.bernoulli, pos);
  }
  if (!finite_positions(out.dx))
    throw NumericalAbort("tracer_rhs: non-finite tracer velocity");
  return out;
}

bool finite_positions(const std::vector<Vec3>& xs) {
  for (const auto& v : xs)
    for (double c : v)
      if (!std::isfinite(c)) return false;
  return true;
}

static TracerCloud rk4_tracers(const TracerCloud& tc,
                               const std::function<TracerTangent(
                                   const TracerCloud&)>& rhs_fn,
                               double dt) {
  const TracerTangent k1 = rhs_fn(tc);
  TracerCloud s2 = tc;
  apply_tangent(s2, 0.5 * dt, k1);
  const TracerTangent k2 = rhs_fn(s2);
  TracerCloud s3 = tc;
  apply_tangent(s3, 0.5 * dt, k2);
  const TracerTangent k3 = rhs_fn(s3);
  TracerCloud s4 = tc;
  apply_tangent(s4, dt, k3);
  const TracerTangent k4 = rhs_fn(s4);

  TracerCloud out = tc;
  apply_tangent(out, dt / 6.0, k1);
  apply_tangent(out, dt / 3.0, k2);
  apply_tangent(out, dt / 3.0, k3);
  apply_tangent(out, dt / 6.0, k4);
  if (!finite_positions(out.x))
    throw NumericalAbort("advect_tracers: non-finite tracer position");
  return out;
}

TracerCloud advect_tracers(const TracerCloud& tc, const FluidState& fs,
                           const EquationOfState& eos, double dt) {
  const TracerStageFields sf = make_stage_fields(fs, eos);
  return rk4_tracers(
      tc, [&](const TracerCloud& c) { return tracer_rhs(c, sf); }, dt);
}

TracerCloud advect_tracers_analytic(
    const TracerCloud& tc, const std::function<Vec3(const Vec3&)>& u,
    const std::function<Mat3(const Vec3&)>& grad_u, double dt) {
  auto rhs_fn = [&](const TracerCloud& c) {
    const std::size_t np = c.size();
    TracerTangent out;
    out.dx.resize(np);
    out.dF.resize(np);
    out.dr.assign(np, 0.0);
    out.dphi.assign(np, 0.0);
    for (std::size_t p = 0; p < np; ++p) {
      out.dx[p] = u(c.x[p]);
      const Mat3 G = grad_u(c.x[p]);
      const Mat3& F = c.F[p];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          out.dF[p][3 * i + j] = G[3 * i + 0] * F[3 * 0 + j] +
                                 G[3 * i + 1] * F[3 * 1 + j] +
                                 G[3 * i + 2] * F[3 * 2 + j];
    }
    return out;
  };
  return rk4_tracers(tc, rhs_fn, dt);
}

std::vector<double> map_density(const TracerCloud& tc) {
  const auto it = tc.carried.find("rho0");
  if (it == tc.carried.end())
    throw std::invalid_argument("map_density: cloud carries no rho0");
  std::vector<double> out(tc.size());
  const std::vector<double> J = tc.jacobian();
  for (std::size_t p = 0; p < tc.size(); ++p) {
    if (!(J[p] > 0.0))
      throw NumericalAbort("map_density: singular map, J <= 0 at tracer " +
                               std::to_string(p));
    out[p] = it->second[p] / J[p];
  }
  return out;
}

std::vector<Vec3> map_bfield(const TracerCloud& tc) {
  if (!tc.has("B0x"))
    throw std::invalid_argument("map_bfield: cloud carries no B0");
  const auto& bx = tc.carried.at("B0x");
  const auto& by = tc.carried.at("B0y");
  const auto& bz = tc.carried.at("B0z");
  const std::vector<double> J = tc.jacobian();
  std::vector<Vec3> out(tc.size());
  for (std::size_t p = 0; p < tc.size(); ++p) {
    if (!(J[p] > 0.0))
      throw NumericalAbort("map_bfield: singular map, J <= 0 at tracer " +
                               std::to_string(p));
    const Mat3& F = tc.F[p];
    const Vec3 b0{bx[p], by[p], bz[p]};
    for (int i = 0; i < 3; ++i)
      out[p][i] = (F[3 * i + 0] * b0[0] + F[3 * i + 1] * b0[1] +
                   F[3 * i + 2] * b0[2]) /
                  J[p];
  }
  return out;
}

}  // namespace hlab
