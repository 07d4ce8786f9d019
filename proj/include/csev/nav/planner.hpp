#pragma once

#include <optional>
#include <vector>

#include "csev/core/types.hpp"
#include "csev/nav/map.hpp"

namespace csev::nav {

struct NavPlan {
  std::vector<NavAction> actions;  // terminates with Stop
  std::vector<Cell> cells;         // start cell plus every forward landing
  int forward_count = 0;

  [[nodiscard]] double l_opt() const { return kCellSize * static_cast<double>(forward_count); }
};

struct GoalPair {
  const Furniture* g1 = nullptr;
  const Furniture* g2 = nullptr;
};

// Resolves the frame's two subgoal classes to goal-candidate furniture.
std::optional<GoalPair> resolve_goals(const core::SemanticFrame& frame, const GridMap& map);

// Minimum-action trajectory entering g1's halo and then g2's halo, by breadth
// first search over (cell, heading, subgoal phase). The subgoal phase flips
// the moment the robot occupies a halo cell, the start cell included.
// Expansion order is fixed, so equal-length ties resolve deterministically.
std::optional<NavPlan> shortest_path_plan(const GridMap& map, const Furniture& g1,
                                          const Furniture& g2);

// Minimum-action trajectory from an arbitrary state to g2's halo, with the
// first subgoal already satisfied. Used to extend a preserved prefix.
std::optional<NavPlan> shortest_suffix(const GridMap& map, RobotState from, const Furniture& g2);

// Number of leading actions of `plan` executed from the map's start pose
// until the robot first occupies a halo cell of `f` (0 when the start cell
// already does).
int prefix_actions_to_halo(const GridMap& map, const Furniture& f, const NavPlan& plan);

// True when some free halo cell of `f` is reachable from `from` over free
// cells (8-connected, matching the motion model's forward moves).
bool halo_reachable(const GridMap& map, Cell from, const Furniture& f);

struct NavRollout {
  RobotState end;
  double progress = 0.0;      // 0, 0.5, or 1.0: ordered subgoal credit
  double path_length = 0.0;   // meters actually moved
  int collisions = 0;
  bool stopped = false;       // explicit stop before the step limit
  bool timeout = false;
};

// Executes an action sequence through the motion model, scoring ordered
// subgoal progress. Processing halts at the first stop or after kStepLimit
// actions, whichever comes first.
NavRollout run_nav_actions(const GridMap& map, const std::vector<NavAction>& actions,
                           const Furniture& g1, const Furniture& g2);

// Expected-behavior bundle for serialization into test instances.
std::optional<core::Behavior> nav_behavior(const GridMap& map, const core::SemanticFrame& frame);

core::Behavior behavior_from_plan(const GridMap& map, const NavPlan& plan,
                                  const core::SemanticFrame& frame);

}  // namespace csev::nav
