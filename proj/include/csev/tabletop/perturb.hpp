#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csev/core/environment.hpp"
#include "csev/core/types.hpp"

namespace csev::tabletop {

// Operator ids, in the default emission order. The two language operators
// rewrite the instruction over the unchanged scene; the two scene operators
// relocate one task-referenced block. All four change the expected behavior.
inline const std::vector<std::string>& tabletop_perturbation_ops() {
  static const std::vector<std::string> ops{"swap_referents", "invert_direction",
                                            "move_target", "move_source"};
  return ops;
}

core::PerturbationTag tabletop_tag_for_op(const std::string& op);

// Applies `op` to the base instance's nominal definition. Emitted instances
// pass the full feasibility check; otherwise the result carries the reason.
core::PerturbResult tabletop_perturb(const core::TestInstance& base, const std::string& op,
                                     std::uint64_t seed);

// Minimum displacement a relocated block must make from its nominal position.
inline constexpr double kMinRelocation = 0.10;

}  // namespace csev::tabletop
