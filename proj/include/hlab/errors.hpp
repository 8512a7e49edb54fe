#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

/// Non-finite state, singular map, or rho <= 0 during evolution: the run
/// cannot continue (CLI exit code 2).
struct NumericalAbort : std::runtime_error {
  explicit NumericalAbort(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hlab
