#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlab/solver.hpp"

namespace hlab {

struct ScenarioInfo {
  std::string name;
  int dims;  // required grid dims, 0 = any
  std::string description;
};

const std::vector<ScenarioInfo>& scenario_catalog();

/// Documented initial conditions; deterministic in (grid, seed).
/// Throws std::invalid_argument for unknown names or wrong dimensionality.
FluidState make_scenario(const std::string& name, const Grid& grid,
                         std::uint64_t seed = 1);

}  // namespace hlab
