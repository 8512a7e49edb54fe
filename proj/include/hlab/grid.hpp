#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlab {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Uniform periodic grid, 2 or 3 axes. 2D grids keep a single z-plane so all
/// vector machinery stays 3-component ("2.5D"); derivatives along a
/// single-plane axis are identically zero.
struct Grid {
  int dims = 3;
  std::array<int, 3> n{8, 8, 8};
  std::array<double, 3> length{two_pi, two_pi, two_pi};
  std::array<double, 3> dx{0, 0, 0};

  static Grid make(int dims, std::array<int, 3> npts,
                   std::array<double, 3> box = {two_pi, two_pi, two_pi}) {
    if (dims != 2 && dims != 3)
      throw std::invalid_argument("Grid: dims must be 2 or 3");
    Grid g;
    g.dims = dims;
    g.n = npts;
    g.length = box;
    if (dims == 2) {
      g.n[2] = 1;
      g.length[2] = box[2];
    }
    for (int a = 0; a < dims; ++a) {
      // 4th-order centered stencil needs 5 distinct points per axis;
      // require n >= 8 so refinement studies stay meaningful.
      if (g.n[a] < 8)
        throw std::invalid_argument("Grid: n must be >= 8 on axis " +
                                    std::to_string(a));
      if (g.length[a] <= 0.0)
        throw std::invalid_argument("Grid: box length must be positive");
      g.dx[a] = g.length[a] / g.n[a];
    }
    if (dims == 2) g.dx[2] = 0.0;
    return g;
  }

  std::size_t size() const {
    return static_cast<std::size_t>(n[0]) * n[1] * n[2];
  }

  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * n[1] + j) * n[0] + i;
  }

  /// Coordinate of grid point `index` along `axis` (cell corners at m*dx).
  double coord(int axis, int index) const { return dx[axis] * index; }

  double cell_volume() const {
    double v = dx[0] * dx[1];
    if (dims == 3) v *= dx[2];
    return v;
  }

  double min_dx() const {
    double m = dx[0];
    for (int a = 1; a < dims; ++a)
      if (dx[a] < m) m = dx[a];
    return m;
  }

  bool operator==(const Grid& o) const {
    return dims == o.dims && n == o.n && length == o.length;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

}  // namespace hlab
