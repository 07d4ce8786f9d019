#pragma once

#include <optional>
#include <vector>

#include "csev/core/types.hpp"
#include "csev/tabletop/board.hpp"

namespace csev::tabletop {

struct PushPlan {
  std::vector<core::Vec2> waypoints;  // pusher polyline, starts at the current pusher pose
  std::size_t approach_end = 0;       // waypoint index of the contact point behind the source
  double approach_length = 0.0;       // polyline length up to approach_end
  double push_length = 0.0;           // straight push distance after contact
  core::Vec2 push_direction;

  [[nodiscard]] double l_opt() const { return approach_length + push_length; }
};

// Straight-line approach to the contact point behind the source block
// (distance pusher radius + block radius along the goal-to-block ray), with an
// arc detour around the source when the straight line would clip it, followed
// by a straight push until the goal predicate holds. Returns nullopt when the
// frame does not resolve in the board or the pushed block would have to leave
// the workspace.
std::optional<PushPlan> optimal_plan(const Board& board, const core::SemanticFrame& frame);

// Expected behavior bundle (waypoints, optimal length, goal description) for
// serialization into test instances.
std::optional<core::Behavior> plan_behavior(const Board& board, const core::SemanticFrame& frame);

}  // namespace csev::tabletop
