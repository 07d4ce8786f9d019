#pragma once

#include <cstdint>

#include "csev/core/rng.hpp"
#include "csev/core/types.hpp"
#include "csev/nav/map.hpp"

namespace csev::nav {

inline constexpr int kLayoutStyleCount = 5;

// One apartment layout: a fixed furniture arrangement per style, jittered by
// the seed under validity constraints (bounds, non-overlap, free start cell
// outside every goal halo, every goal candidate reachable from the start).
GridMap sample_layout(int style, core::Rng& rng);

// Feasibility: both subgoal classes resolve to goal candidates, the ordered
// goal is not already satisfied at the start cell, and a plan exists.
core::Feasibility nav_feasible(const core::Instruction& instruction, const GridMap& map);

core::TestInstance sample_nav_instance(int style, core::Rng& rng, const std::string& id);

// n instances cycling through the layout styles, goal pairs seed-drawn.
core::EvaluationSet sample_nav_set(int n, std::uint64_t seed);

}  // namespace csev::nav
