#pragma once

// Reference implementations for checking the navigation planner: a
// layer-by-layer exhaustive search over the full (cell, heading, subgoal
// phase) state graph that shares only the motion model with the planner, and
// a generator of small random maps to drive the comparison.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csev/core/rng.hpp"
#include "csev/nav/map.hpp"

namespace csev::test_support {

// Minimum number of actions, the terminating stop included, that enters g1's
// halo and then g2's halo from the map's start pose. nullopt when no action
// sequence does.
inline std::optional<int> exhaustive_action_count(const nav::GridMap& map,
                                                  const nav::Furniture& g1,
                                                  const nav::Furniture& g2) {
  const int width = map.width;
  const auto encode = [&](const nav::RobotState& s, int phase) {
    return ((s.cell.y * width + s.cell.x) * nav::kHeadingCount + s.heading) * 2 + phase;
  };
  std::vector<char> seen(
      static_cast<std::size_t>(width * map.height * nav::kHeadingCount * 2), 0);

  const nav::RobotState start{map.start, map.start_heading};
  const int start_phase = map.in_halo(g1, map.start) ? 1 : 0;
  if (start_phase == 1 && map.in_halo(g2, map.start)) return 1;
  seen[static_cast<std::size_t>(encode(start, start_phase))] = 1;

  std::vector<std::pair<nav::RobotState, int>> frontier{{start, start_phase}};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<std::pair<nav::RobotState, int>> next;
    for (const auto& [state, phase] : frontier) {
      for (const nav::NavAction action :
           {nav::NavAction::Right, nav::NavAction::Left, nav::NavAction::Forward}) {
        const nav::StepResult step = nav_step(map, state, action);
        if (action == nav::NavAction::Forward && !step.moved) continue;
        const int new_phase = (phase == 1 || map.in_halo(g1, step.state.cell)) ? 1 : 0;
        char& mark = seen[static_cast<std::size_t>(encode(step.state, new_phase))];
        if (mark) continue;
        mark = 1;
        if (new_phase == 1 && map.in_halo(g2, step.state.cell)) return depth + 1;
        next.emplace_back(step.state, new_phase);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// Random map of at most max_size cells per side with two goal-candidate
// rectangles and up to two passive ones. nullopt when the draw produces an
// overlapping or otherwise invalid arrangement; callers redraw.
inline std::optional<nav::GridMap> try_random_small_map(core::Rng& rng, int max_size = 10) {
  nav::GridMap map;
  map.width = 5 + rng.uniform_int(max_size - 4);
  map.height = 5 + rng.uniform_int(max_size - 4);

  const int count = 2 + rng.uniform_int(3);
  for (int i = 0; i < count; ++i) {
    nav::Furniture f;
    f.id = (i < 2 ? "goal-" : "passive-") + std::to_string(i);
    f.cls = f.id;
    f.role = i < 2 ? nav::FurnitureRole::GoalCandidate : nav::FurnitureRole::Passive;
    const int w = 1 + rng.uniform_int(2);
    const int h = 1 + rng.uniform_int(2);
    f.x0 = rng.uniform_int(map.width - w + 1);
    f.y0 = rng.uniform_int(map.height - h + 1);
    f.x1 = f.x0 + w - 1;
    f.y1 = f.y0 + h - 1;
    for (const nav::Furniture& other : map.furniture) {
      if (f.x0 <= other.x1 && other.x0 <= f.x1 && f.y0 <= other.y1 && other.y0 <= f.y1) {
        return std::nullopt;
      }
    }
    map.furniture.push_back(std::move(f));
  }

  for (int attempt = 0; attempt < 20; ++attempt) {
    const nav::Cell c{rng.uniform_int(map.width), rng.uniform_int(map.height)};
    if (!map.occupied(c)) {
      map.start = c;
      break;
    }
    if (attempt == 19) return std::nullopt;
  }
  map.start_heading = rng.uniform_int(nav::kHeadingCount);
  map.sort_furniture();
  if (!map.valid()) return std::nullopt;
  return map;
}

}  // namespace csev::test_support
