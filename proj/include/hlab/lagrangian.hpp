#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hlab/clebsch.hpp"
#include "hlab/solver.hpp"

namespace hlab {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<double, 9>;  // row-major, F[3*i+j] = dx_i/dx0_j

/// Cubic Lagrange interpolation (4 points per active axis, periodic).
double interp_scalar(const ScalarField& f, const Vec3& pos);
Vec3 interp_vector(const VectorField& v, const Vec3& pos);

double det3(const Mat3& m);

bool finite_positions(const std::vector<Vec3>& xs);

/// Sampled Lagrangian map: labels x0, positions x, per-tracer deformation
/// matrix F integrated by dF/dt = grad(u) F, and named carried scalars.
/// Carried entries "r" and "phi" evolve (dr/dt=-T, dphi/dt=|u|^2/2-h);
/// everything else is a label constant.
struct TracerCloud {
  Grid grid;
  std::vector<Vec3> x0;
  std::vector<Vec3> x;
  std::vector<Mat3> F;
  std::map<std::string, std::vector<double>> carried;

  std::size_t size() const { return x.size(); }
  std::vector<double> jacobian() const;
  bool has(const std::string& name) const { return carried.count(name) != 0; }
};

/// Regular sub-lattice plus deterministic jitter; carries S0, rho0, q0
/// (potential vorticity), B0*, plus evolving r and phi seeded from cs.
TracerCloud seed_tracers(const FluidState& fs, const ClebschState& cs,
                         int count = 512, std::uint64_t seed = 1);

struct TracerTangent {
  std::vector<Vec3> dx;
  std::vector<Mat3> dF;
  std::vector<double> dr;
  std::vector<double> dphi;

  TracerTangent& axpy(double a, const TracerTangent& o);
};

void apply_tangent(TracerCloud& tc, double a, const TracerTangent& k);

/// Grid fields a tracer stage needs; grad_u[3*i+j] = d u_i / d x_j.
struct TracerStageFields {
  const VectorField* u = nullptr;
  std::array<ScalarField, 9> grad_u;
  ScalarField T;          // for dr/dt
  ScalarField bernoulli;  // |u|^2/2 - h, for dphi/dt
};

TracerStageFields make_stage_fields(const FluidState& fs,
                                    const EquationOfState& eos,
                                    const ThermoFields* pre = nullptr);

TracerTangent tracer_rhs(const TracerCloud& tc, const TracerStageFields& sf);

/// RK4 with the velocity field frozen at fs (exact time dependence is the
/// coupled stepper's job; this overload is for steady fields and tests).
TracerCloud advect_tracers(const TracerCloud& tc, const FluidState& fs,
                           const EquationOfState& eos, double dt);

/// RK4 against an analytic steady velocity with analytic gradient;
/// gradient entries grad[3*i+j] = d u_i / d x_j.
TracerCloud advect_tracers_analytic(
    const TracerCloud& tc, const std::function<Vec3(const Vec3&)>& u,
    const std::function<Mat3(const Vec3&)>& grad_u, double dt);

/// rho0/J per tracer; throws std::runtime_error if any J <= 0.
std::vector<double> map_density(const TracerCloud& tc);
/// F B0 / J per tracer.
std::vector<Vec3> map_bfield(const TracerCloud& tc);

}  // namespace hlab
