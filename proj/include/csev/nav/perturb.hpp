#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csev/core/environment.hpp"
#include "csev/core/types.hpp"

namespace csev::nav {

// Operator ids in the default emission order: reword the instruction, change
// the final goal noun, move or add a passive object off the path, and alter
// the path itself (relocate the final goal or block the route).
inline const std::vector<std::string>& nav_perturbation_ops() {
  static const std::vector<std::string> ops{"reword", "change_goal", "move_passive",
                                            "alter_path"};
  return ops;
}

core::PerturbationTag nav_tag_for_op(const std::string& op);

core::PerturbResult nav_perturb(const core::TestInstance& base, const std::string& op,
                                std::uint64_t seed);

// Minimum translation (in cells, Chebyshev) when the final goal's furniture
// is relocated.
inline constexpr int kMinGoalMoveCells = 2;

}  // namespace csev::nav
