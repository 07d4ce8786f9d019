#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csev/core/rng.hpp"
#include "csev/core/types.hpp"
#include "csev/tabletop/board.hpp"
#include "csev/tabletop/task.hpp"

namespace csev::tabletop {

// Block set shared by every scene in one evaluation set. Scenes resample
// positions only; keeping the roster fixed is what makes inter-trial reset
// cost a sum of matched-block displacements instead of staging churn.
struct Roster {
  std::vector<Block> blocks;  // positions unset; id/color/shape only
  double spawn_scale = 1.0;   // centered sub-rectangle scale for block spawns
};

Roster sample_roster(core::Rng& rng);

// Fresh block/pusher placement for the roster. Spawn positions are confined
// to the centered sub-rectangle so the expected inter-scene rearrangement
// distance stays near the calibration target regardless of roster size.
Board sample_board(const Roster& roster, core::Rng& rng);

// One feasible instance of the category: scene, instruction, and expected
// behavior (verified to execute to success). Throws std::runtime_error after
// repeated infeasible draws.
core::TestInstance sample_instance(Category category, const Roster& roster, core::Rng& rng,
                                   const std::string& id);

// Evaluation set of n instances drawn under a fixed category quota (weighted
// toward the dual-referent directional category), order seed-shuffled.
core::EvaluationSet sample_tabletop_set(int n, std::uint64_t seed);

// Full feasibility: referents resolve, goal not already satisfied, and the
// planned push executes to success through the dynamics.
core::Feasibility tabletop_feasible(const core::Instruction& instruction, const Board& board);

}  // namespace csev::tabletop
