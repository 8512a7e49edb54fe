#include "hlab/scenario.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hlab {

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> cat = {
      {"uniform", 0, "constant state rho=1, u=0, S=0, B=z-hat"},
      {"acoustic1d", 0, "small 1D acoustic wave, drho=1e-6 sin(x)"},
      {"vortex2d", 2,
       "2.5D helical vortex, entropy aligned with the stream function"},
      {"abc_mhd", 3, "3D ABC (Beltrami) magnetic field, high beta, carries A"},
      {"random_smooth", 0,
       "random low-wavenumber fields, amplitude 0.1, solenoidal B = curl A"},
      {"bperp_entropy2d", 2,
       "2.5D in-plane B = grad(Az) x z-hat with S = f(Az), so B.grad S = 0"},
  };
  return cat;
}

namespace {

// sum of a few random cosine modes with |k| <= 2 per active axis
ScalarField random_modes(const Grid& g, std::mt19937_64& rng, double amp,
                         double mean) {
  std::uniform_int_distribution<int> kdist(-2, 2);
  std::uniform_real_distribution<double> phase(0.0, two_pi);
  const int nmodes = 4;
  struct Mode {
    double kx, ky, kz, th;
  };
  std::vector<Mode> modes;
  while (static_cast<int>(modes.size()) < nmodes) {
    Mode m;
    m.kx = kdist(rng);
    m.ky = kdist(rng);
    m.kz = g.dims == 3 ? kdist(rng) : 0;
    m.th = phase(rng);
    if (m.kx == 0 && m.ky == 0 && m.kz == 0) continue;
    modes.push_back(m);
  }
  return sample(g, [=](double x, double y, double z) {
    double v = mean;
    for (const auto& m : modes)
      v += (amp / nmodes) * std::cos(m.kx * x + m.ky * y + m.kz * z + m.th);
    return v;
  });
}

}  // namespace

FluidState make_scenario(const std::string& name, const Grid& grid,
                         std::uint64_t seed) {
  for (const auto& info : scenario_catalog()) {
    if (info.name != name) continue;
    if (info.dims != 0 && info.dims != grid.dims)
      throw std::invalid_argument("scenario '" + name + "' needs dims=" +
                                  std::to_string(info.dims));
  }

  FluidState s(grid);

  if (name == "uniform") {
    s.B.comp[2] = ScalarField(grid, 1.0);
    return s;
  }

  if (name == "acoustic1d") {
    // right-moving linear sound wave on the default ideal EOS
    // (gamma=5/3, K=1, c_v=1): c0 = sqrt(gamma p0 / rho0) = sqrt(5/3)
    const double delta = 1e-6;
    const double c0 = std::sqrt(5.0 / 3.0);
    s.rho = sample(grid, [=](double x, double, double) {
      return 1.0 + delta * std::sin(x);
    });
    s.u.comp[0] = sample(grid, [=](double x, double, double) {
      return c0 * delta * std::sin(x);
    });
    return s;
  }

  if (name == "vortex2d") {
    // stream function psi = cos x + cos y with swirl u_z = 0.5 psi; S
    // follows psi so omega.grad S = 0 and any label g(psi) satisfies
    // omega.grad g = 0 (the relabeling-candidate construction)
    s.rho = sample(grid, [](double x, double y, double) {
      return 1.0 + 0.1 * std::cos(x) * std::cos(y);
    });
    s.u = sample_vector(grid, [](double x, double y, double) {
      return std::array<double, 3>{-0.8 * std::sin(y), 0.8 * std::sin(x),
                                   0.4 * (std::cos(x) + std::cos(y))};
    });
    s.S = sample(grid, [](double x, double y, double) {
      return 0.1 * (std::cos(x) + std::cos(y));
    });
    return s;
  }

  if (name == "abc_mhd") {
    // Beltrami field: curl B = B, so A = B is a valid advected-gauge seed
    const double b0 = 0.2, u0 = 0.1;
    s.rho = sample(grid, [](double x, double y, double) {
      return 1.0 + 0.05 * std::sin(x + y);
    });
    s.S = sample(grid, [](double x, double, double) {
      return 0.1 * std::cos(x);
    });
    s.u = sample_vector(grid, [=](double x, double y, double z) {
      return std::array<double, 3>{u0 * std::sin(y) * std::cos(z),
                                   u0 * std::sin(z) * std::cos(x),
                                   u0 * std::sin(x) * std::cos(y)};
    });
    s.B = sample_vector(grid, [=](double x, double y, double z) {
      return std::array<double, 3>{b0 * (std::sin(z) + std::cos(y)),
                                   b0 * (std::sin(x) + std::cos(z)),
                                   b0 * (std::sin(y) + std::cos(x))};
    });
    s.A = s.B;
    s.has_A = true;
    return s;
  }

  if (name == "random_smooth") {
    std::mt19937_64 rng(seed);
    s.rho = random_modes(grid, rng, 0.1, 1.0);
    s.S = random_modes(grid, rng, 0.1, 1.0);
    for (int c = 0; c < 3; ++c) s.u.comp[c] = random_modes(grid, rng, 0.1, 0.0);
    for (int c = 0; c < 3; ++c) s.A.comp[c] = random_modes(grid, rng, 0.1, 0.0);
    s.has_A = true;
    s.B = curl(s.A);
    return s;
  }

  if (name == "bperp_entropy2d") {
    // B = grad(Az) x z-hat lies in Az level sets; S = f(Az) then gives
    // B.grad S = 0 exactly in the continuum
    const auto Az = [](double x, double y) {
      return 0.2 * (std::cos(x) + std::cos(y));
    };
    s.A.comp[2] = sample(grid, [=](double x, double y, double) {
      return Az(x, y);
    });
    s.has_A = true;
    s.B = sample_vector(grid, [](double x, double y, double) {
      return std::array<double, 3>{-0.2 * std::sin(y), 0.2 * std::sin(x), 0.0};
    });
    s.S = sample(grid, [=](double x, double y, double) {
      return 0.1 * Az(x, y);
    });
    s.rho = sample(grid, [](double x, double y, double) {
      return 1.0 + 0.1 * std::sin(x) * std::sin(y);
    });
    s.u = sample_vector(grid, [](double x, double y, double) {
      return std::array<double, 3>{0.3 * std::sin(y), 0.3 * std::sin(x),
                                   0.2 * std::sin(x + y)};
    });
    return s;
  }

  throw std::invalid_argument("unknown scenario '" + name + "'");
}

}  // namespace hlab
