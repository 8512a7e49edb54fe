#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "hlab/grid.hpp"

namespace hlab {

struct ScalarField {
  Grid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid(g), values(g.size(), fill) {}

  double& operator()(int i, int j, int k) { return values[grid.idx(i, j, k)]; }
  double operator()(int i, int j, int k) const {
    return values[grid.idx(i, j, k)];
  }

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double a);
  /// this += a*o
  ScalarField& axpy(double a, const ScalarField& o);
};

/// Three components on any grid; on 2D grids the fields simply do not vary
/// along z, so curls and cross products stay full 3-vectors.
struct VectorField {
  Grid grid;
  std::array<ScalarField, 3> comp;

  VectorField() = default;
  explicit VectorField(const Grid& g)
      : grid(g), comp{ScalarField(g), ScalarField(g), ScalarField(g)} {}

  ScalarField& operator[](int c) { return comp[c]; }
  const ScalarField& operator[](int c) const { return comp[c]; }

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double a);
  VectorField& axpy(double a, const VectorField& o);
};

// ---------------------------------------------------------------------------
// construction helpers

ScalarField sample(const Grid& g,
                   const std::function<double(double, double, double)>& f);
VectorField sample_vector(
    const Grid& g,
    const std::function<std::array<double, 3>(double, double, double)>& f);

// ---------------------------------------------------------------------------
// calculus (4th-order centered differences, periodic wrap)

/// Active stencil order: 4 normally, 2 when HLAB_TEST_STENCIL_ORDER=2 is set
/// (negative-control hook for the convergence driver).
int stencil_order();

/// d f / d x_axis. Axes with a single plane return zero.
ScalarField deriv(const ScalarField& f, int axis);

VectorField grad(const ScalarField& f);
ScalarField div(const VectorField& v);
VectorField curl(const VectorField& v);

/// Midpoint-rule integral over the periodic box (exact summation by parts).
double integrate(const ScalarField& f);

/// [u,v] = u.grad v - v.grad u
VectorField lie_bracket(const VectorField& u, const VectorField& v);

// ---------------------------------------------------------------------------
// pointwise algebra

ScalarField dot(const VectorField& a, const VectorField& b);
VectorField cross(const VectorField& a, const VectorField& b);
ScalarField norm2(const VectorField& a);  // |a|^2
VectorField scale(const VectorField& a, const ScalarField& s);
VectorField scale(const VectorField& a, double s);
ScalarField multiply(const ScalarField& a, const ScalarField& b);
ScalarField divide(const ScalarField& a, const ScalarField& b);

/// u.grad f
ScalarField advect(const VectorField& u, const ScalarField& f);
/// (u.grad) v, componentwise
VectorField advect_vector(const VectorField& u, const VectorField& v);

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double a, ScalarField b);
VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double a, VectorField b);

// ---------------------------------------------------------------------------
// norms and diagnostics

double linf(const ScalarField& f);
double linf(const VectorField& v);
/// sqrt( integral of f^2 )
double l2(const ScalarField& f);
double l2(const VectorField& v);

bool finite(const ScalarField& f);
bool finite(const VectorField& v);

void require_same_grid(const Grid& a, const Grid& b, const char* where);

/// Restrict a field on a fine grid to a coarse grid whose points are a
/// subset of the fine points (integer refinement ratio per axis).
ScalarField restrict_to(const ScalarField& fine, const Grid& coarse);
VectorField restrict_to(const VectorField& fine, const Grid& coarse);

/// Least-squares slope of log(err) vs log(h): the observed convergence order.
double fit_order(const std::vector<double>& h, const std::vector<double>& err);

}  // namespace hlab
