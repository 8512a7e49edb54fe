#include "hlab/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace hlab {

// ---------------------------------------------------------------------------
// kernel threading. HLAB_THREADS caps the worker count; pointwise kernels
// write disjoint slabs so results do not depend on the partition.

static int max_threads() {
  static const int t = [] {
    if (const char* e = std::getenv("HLAB_THREADS")) {
      const int v = std::atoi(e);
      if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
  }();
  return t;
}

template <class Body>
static void parallel_slabs(int nz, const Body& body) {
  const int nt = std::min(max_threads(), nz);
  if (nt <= 1 || nz < 4) {
    body(0, nz);
    return;
  }
  std::vector<std::thread> workers;
  const int chunk = (nz + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    const int k0 = t * chunk;
    const int k1 = std::min(nz, k0 + chunk);
    if (k0 >= k1) break;
    workers.emplace_back([&body, k0, k1] { body(k0, k1); });
  }
  for (auto& w : workers) w.join();
}

int stencil_order() {
  static const int order = [] {
    if (const char* e = std::getenv("HLAB_TEST_STENCIL_ORDER"))
      if (std::atoi(e) == 2) return 2;
    return 4;
  }();
  return order;
}

// ---------------------------------------------------------------------------
// field arithmetic

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(grid, o.grid, "ScalarField::+=");
  for (std::size_t q = 0; q < values.size(); ++q) values[q] += o.values[q];
  return *this;
}
ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(grid, o.grid, "ScalarField::-=");
  for (std::size_t q = 0; q < values.size(); ++q) values[q] -= o.values[q];
  return *this;
}
ScalarField& ScalarField::operator*=(double a) {
  for (double& v : values) v *= a;
  return *this;
}
ScalarField& ScalarField::axpy(double a, const ScalarField& o) {
  require_same_grid(grid, o.grid, "ScalarField::axpy");
  for (std::size_t q = 0; q < values.size(); ++q)
    values[q] += a * o.values[q];
  return *this;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (int c = 0; c < 3; ++c) comp[c] += o.comp[c];
  return *this;
}
VectorField& VectorField::operator-=(const VectorField& o) {
  for (int c = 0; c < 3; ++c) comp[c] -= o.comp[c];
  return *this;
}
VectorField& VectorField::operator*=(double a) {
  for (int c = 0; c < 3; ++c) comp[c] *= a;
  return *this;
}
VectorField& VectorField::axpy(double a, const VectorField& o) {
  for (int c = 0; c < 3; ++c) comp[c].axpy(a, o.comp[c]);
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double a, ScalarField b) { return b *= a; }
VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double a, VectorField b) { return b *= a; }

// ---------------------------------------------------------------------------
// sampling

ScalarField sample(const Grid& g,
                   const std::function<double(double, double, double)>& f) {
  ScalarField out(g);
  for (int k = 0; k < g.n[2]; ++k)
    for (int j = 0; j < g.n[1]; ++j)
      for (int i = 0; i < g.n[0]; ++i)
        out(i, j, k) = f(g.coord(0, i), g.coord(1, j), g.coord(2, k));
  return out;
}

VectorField sample_vector(
    const Grid& g,
    const std::function<std::array<double, 3>(double, double, double)>& f) {
  VectorField out(g);
  for (int k = 0; k < g.n[2]; ++k)
    for (int j = 0; j < g.n[1]; ++j)
      for (int i = 0; i < g.n[0]; ++i) {
        const auto v = f(g.coord(0, i), g.coord(1, j), g.coord(2, k));
        const std::size_t q = g.idx(i, j, k);
        for (int c = 0; c < 3; ++c) out.comp[c].values[q] = v[c];
      }
  return out;
}

// ---------------------------------------------------------------------------
// derivatives

ScalarField deriv(const ScalarField& f, int axis) {
  const Grid& g = f.grid;
  ScalarField out(g);
  const int na = g.n[axis];
  if (na == 1) return out;  // inactive axis (2.5D z)

  const std::ptrdiff_t stride =
      axis == 0 ? 1
                : (axis == 1 ? static_cast<std::ptrdiff_t>(g.n[0])
                             : static_cast<std::ptrdiff_t>(g.n[0]) * g.n[1]);

  // periodic offsets per coordinate along the axis
  std::vector<std::ptrdiff_t> op1(na), om1(na), op2(na), om2(na);
  for (int c = 0; c < na; ++c) {
    op1[c] = ((c + 1) % na - c) * stride;
    om1[c] = ((c - 1 + na) % na - c) * stride;
    op2[c] = ((c + 2) % na - c) * stride;
    om2[c] = ((c - 2 + 2 * na) % na - c) * stride;
  }

  const int order = stencil_order();
  const double w4 = 1.0 / (12.0 * g.dx[axis]);
  const double w2 = 1.0 / (2.0 * g.dx[axis]);
  const int nx = g.n[0], ny = g.n[1], nz = g.n[2];
  const double* in = f.values.data();
  double* o = out.values.data();

  parallel_slabs(nz, [&](int k0, int k1) {
    for (int k = k0; k < k1; ++k)
      for (int j = 0; j < ny; ++j) {
        const std::size_t row = g.idx(0, j, k);
        for (int i = 0; i < nx; ++i) {
          const std::size_t q = row + i;
          const int c = axis == 0 ? i : (axis == 1 ? j : k);
          if (order == 4) {
            // grouped as differences so constant fields give exactly zero
            o[q] = w4 * ((in[q + om2[c]] - in[q + op2[c]]) +
                         8.0 * (in[q + op1[c]] - in[q + om1[c]]));
          } else {
            o[q] = w2 * (in[q + op1[c]] - in[q + om1[c]]);
          }
        }
      }
  });
  return out;
}

VectorField grad(const ScalarField& f) {
  VectorField out(f.grid);
  for (int a = 0; a < 3; ++a) out.comp[a] = deriv(f, a);
  return out;
}

ScalarField div(const VectorField& v) {
  ScalarField out = deriv(v.comp[0], 0);
  out += deriv(v.comp[1], 1);
  out += deriv(v.comp[2], 2);
  return out;
}

VectorField curl(const VectorField& v) {
  VectorField out(v.grid);
  out.comp[0] = deriv(v.comp[2], 1) - deriv(v.comp[1], 2);
  out.comp[1] = deriv(v.comp[0], 2) - deriv(v.comp[2], 0);
  out.comp[2] = deriv(v.comp[1], 0) - deriv(v.comp[0], 1);
  return out;
}

double integrate(const ScalarField& f) {
  double s = 0.0;
  for (double v : f.values) s += v;
  return s * f.grid.cell_volume();
}

VectorField lie_bracket(const VectorField& u, const VectorField& v) {
  require_same_grid(u.grid, v.grid, "lie_bracket");
  VectorField out = advect_vector(u, v);
  out -= advect_vector(v, u);
  return out;
}

// ---------------------------------------------------------------------------
// pointwise algebra

ScalarField dot(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid, b.grid, "dot");
  ScalarField out(a.grid);
  for (std::size_t q = 0; q < out.values.size(); ++q)
    out.values[q] = a.comp[0].values[q] * b.comp[0].values[q] +
                    a.comp[1].values[q] * b.comp[1].values[q] +
                    a.comp[2].values[q] * b.comp[2].values[q];
  return out;
}

VectorField cross(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid, b.grid, "cross");
  VectorField out(a.grid);
  const auto &ax = a.comp[0].values, &ay = a.comp[1].values,
             &az = a.comp[2].values;
  const auto &bx = b.comp[0].values, &by = b.comp[1].values,
             &bz = b.comp[2].values;
  for (std::size_t q = 0; q < ax.size(); ++q) {
    out.comp[0].values[q] = ay[q] * bz[q] - az[q] * by[q];
    out.comp[1].values[q] = az[q] * bx[q] - ax[q] * bz[q];
    out.comp[2].values[q] = ax[q] * by[q] - ay[q] * bx[q];
  }
  return out;
}

ScalarField norm2(const VectorField& a) {
  ScalarField out(a.grid);
  for (std::size_t q = 0; q < out.values.size(); ++q) {
    const double x = a.comp[0].values[q];
    const double y = a.comp[1].values[q];
    const double z = a.comp[2].values[q];
    out.values[q] = x * x + y * y + z * z;
  }
  return out;
}

VectorField scale(const VectorField& a, const ScalarField& s) {
  require_same_grid(a.grid, s.grid, "scale");
  VectorField out(a.grid);
  for (int c = 0; c < 3; ++c)
    for (std::size_t q = 0; q < s.values.size(); ++q)
      out.comp[c].values[q] = a.comp[c].values[q] * s.values[q];
  return out;
}

VectorField scale(const VectorField& a, double s) {
  VectorField out = a;
  out *= s;
  return out;
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "multiply");
  ScalarField out(a.grid);
  for (std::size_t q = 0; q < out.values.size(); ++q)
    out.values[q] = a.values[q] * b.values[q];
  return out;
}

ScalarField divide(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid, "divide");
  ScalarField out(a.grid);
  for (std::size_t q = 0; q < out.values.size(); ++q)
    out.values[q] = a.values[q] / b.values[q];
  return out;
}

ScalarField advect(const VectorField& u, const ScalarField& f) {
  require_same_grid(u.grid, f.grid, "advect");
  ScalarField out(f.grid);
  for (int a = 0; a < 3; ++a) {
    if (f.grid.n[a] == 1) continue;
    const ScalarField df = deriv(f, a);
    for (std::size_t q = 0; q < out.values.size(); ++q)
      out.values[q] += u.comp[a].values[q] * df.values[q];
  }
  return out;
}

VectorField advect_vector(const VectorField& u, const VectorField& v) {
  VectorField out(v.grid);
  for (int c = 0; c < 3; ++c) out.comp[c] = advect(u, v.comp[c]);
  return out;
}

// ---------------------------------------------------------------------------
// norms

double linf(const ScalarField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double linf(const VectorField& v) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c) m = std::max(m, linf(v.comp[c]));
  return m;
}

double l2(const ScalarField& f) {
  double s = 0.0;
  for (double v : f.values) s += v * v;
  return std::sqrt(s * f.grid.cell_volume());
}

double l2(const VectorField& v) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c)
    for (double x : v.comp[c].values) s += x * x;
  return std::sqrt(s * v.grid.cell_volume());
}

bool finite(const ScalarField& f) {
  for (double v : f.values)
    if (!std::isfinite(v)) return false;
  return true;
}

bool finite(const VectorField& v) {
  return finite(v.comp[0]) && finite(v.comp[1]) && finite(v.comp[2]);
}

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (a != b)
    throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

// ---------------------------------------------------------------------------
// grid transfer and order fitting

ScalarField restrict_to(const ScalarField& fine, const Grid& coarse) {
  const Grid& gf = fine.grid;
  std::array<int, 3> ratio{1, 1, 1};
  for (int a = 0; a < 3; ++a) {
    if (gf.n[a] % coarse.n[a] != 0)
      throw std::invalid_argument("restrict_to: incompatible resolutions");
    ratio[a] = gf.n[a] / coarse.n[a];
  }
  ScalarField out(coarse);
  for (int k = 0; k < coarse.n[2]; ++k)
    for (int j = 0; j < coarse.n[1]; ++j)
      for (int i = 0; i < coarse.n[0]; ++i)
        out(i, j, k) = fine(i * ratio[0], j * ratio[1], k * ratio[2]);
  return out;
}

VectorField restrict_to(const VectorField& fine, const Grid& coarse) {
  VectorField out(coarse);
  for (int c = 0; c < 3; ++c) out.comp[c] = restrict_to(fine.comp[c], coarse);
  return out;
}

double fit_order(const std::vector<double>& h, const std::vector<double>& err) {
  if (h.size() != err.size() || h.size() < 2)
    throw std::invalid_argument("fit_order: need >= 2 (h, err) samples");
  const std::size_t m = h.size();
  double sx = 0, sy = 0;
  std::vector<double> x(m), y(m);
  for (std::size_t q = 0; q < m; ++q) {
    x[q] = std::log(h[q]);
    y[q] = std::log(std::max(err[q], 1e-300));
    sx += x[q];
    sy += y[q];
  }
  const double mx = sx / m, my = sy / m;
  double num = 0, den = 0;
  for (std::size_t q = 0; q < m; ++q) {
    num += (x[q] - mx) * (y[q] - my);
    den += (x[q] - mx) * (x[q] - mx);
  }
  return num / den;
}

}  // namespace hlab
