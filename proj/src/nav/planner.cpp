#include "csev/nav/planner.hpp"

#include <deque>
#include <sstream>

namespace csev::nav {

namespace {

int state_index(const GridMap& map, Cell c, int heading, int phase) {
  return ((c.y * map.width + c.x) * kHeadingCount + heading) * 2 + phase;
}

// Uniform-cost breadth first search; g1 may be null when the first subgoal is
// already satisfied, in which case the phase is pinned to 1.
std::optional<NavPlan> bfs(const GridMap& map, RobotState start, const Furniture* g1,
                           const Furniture& g2) {
  const auto in_h1 = [&](Cell c) { return g1 != nullptr && map.in_halo(*g1, c); };
  const int start_phase = (g1 == nullptr || in_h1(start.cell)) ? 1 : 0;

  const int total = map.width * map.height * kHeadingCount * 2;
  std::vector<int> parent(static_cast<std::size_t>(total), -1);
  std::vector<signed char> parent_action(static_cast<std::size_t>(total), -1);
  std::vector<char> seen(static_cast<std::size_t>(total), 0);

  struct Node {
    RobotState state;
    int phase;
  };
  std::deque<Node> queue;
  const int root = state_index(map, start.cell, start.heading, start_phase);
  seen[static_cast<std::size_t>(root)] = 1;
  queue.push_back({start, start_phase});

  int goal_index = -1;
  if (start_phase == 1 && map.in_halo(g2, start.cell)) goal_index = root;

  constexpr NavAction kMoves[] = {NavAction::Forward, NavAction::Left, NavAction::Right};
  while (goal_index < 0 && !queue.empty()) {
    const Node node = queue.front();
    queue.pop_front();
    const int at = state_index(map, node.state.cell, node.state.heading, node.phase);
    for (const NavAction action : kMoves) {
      const StepResult step = nav_step(map, node.state, action);
      if (action == NavAction::Forward && !step.moved) continue;
      int phase = node.phase;
      if (phase == 0 && in_h1(step.state.cell)) phase = 1;
      const int next = state_index(map, step.state.cell, step.state.heading, phase);
      if (seen[static_cast<std::size_t>(next)]) continue;
      seen[static_cast<std::size_t>(next)] = 1;
      parent[static_cast<std::size_t>(next)] = at;
      parent_action[static_cast<std::size_t>(next)] = static_cast<signed char>(action);
      if (phase == 1 && map.in_halo(g2, step.state.cell)) {
        goal_index = next;
        break;
      }
      queue.push_back({step.state, phase});
    }
  }
  if (goal_index < 0) return std::nullopt;

  std::vector<NavAction> actions;
  for (int at = goal_index; parent[static_cast<std::size_t>(at)] >= 0;
       at = parent[static_cast<std::size_t>(at)]) {
    actions.push_back(static_cast<NavAction>(parent_action[static_cast<std::size_t>(at)]));
  }
  std::reverse(actions.begin(), actions.end());
  actions.push_back(NavAction::Stop);

  NavPlan plan;
  plan.actions = std::move(actions);
  plan.cells.push_back(start.cell);
  RobotState state = start;
  for (const NavAction action : plan.actions) {
    const StepResult step = nav_step(map, state, action);
    state = step.state;
    if (step.moved) {
      plan.cells.push_back(state.cell);
      ++plan.forward_count;
    }
  }
  return plan;
}

}  // namespace

std::optional<GoalPair> resolve_goals(const core::SemanticFrame& frame, const GridMap& map) {
  if (frame.category != "nav" || frame.source.empty() || frame.target.empty() ||
      frame.source == frame.target) {
    return std::nullopt;
  }
  GoalPair goals;
  goals.g1 = map.find_goal_class(frame.source);
  goals.g2 = map.find_goal_class(frame.target);
  if (goals.g1 == nullptr || goals.g2 == nullptr) return std::nullopt;
  return goals;
}

std::optional<NavPlan> shortest_path_plan(const GridMap& map, const Furniture& g1,
                                          const Furniture& g2) {
  return bfs(map, {map.start, map.start_heading}, &g1, g2);
}

std::optional<NavPlan> shortest_suffix(const GridMap& map, RobotState from, const Furniture& g2) {
  return bfs(map, from, nullptr, g2);
}

int prefix_actions_to_halo(const GridMap& map, const Furniture& f, const NavPlan& plan) {
  RobotState state{map.start, map.start_heading};
  if (map.in_halo(f, state.cell)) return 0;
  int executed = 0;
  for (const NavAction action : plan.actions) {
    state = nav_step(map, state, action).state;
    ++executed;
    if (map.in_halo(f, state.cell)) return executed;
  }
  return executed;
}

bool halo_reachable(const GridMap& map, Cell from, const Furniture& f) {
  if (!map.in_bounds(from) || map.occupied(from)) return false;
  std::vector<char> seen(static_cast<std::size_t>(map.width * map.height), 0);
  const auto index = [&](Cell c) { return static_cast<std::size_t>(c.y * map.width + c.x); };
  std::deque<Cell> queue{from};
  seen[index(from)] = 1;
  while (!queue.empty()) {
    const Cell at = queue.front();
    queue.pop_front();
    if (map.in_halo(f, at)) return true;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const Cell next{at.x + dx, at.y + dy};
        if (!map.in_bounds(next) || map.occupied(next) || seen[index(next)]) continue;
        seen[index(next)] = 1;
        queue.push_back(next);
      }
    }
  }
  return false;
}

NavRollout run_nav_actions(const GridMap& map, const std::vector<NavAction>& actions,
                           const Furniture& g1, const Furniture& g2) {
  NavRollout rollout;
  RobotState state{map.start, map.start_heading};
  bool reached1 = map.in_halo(g1, state.cell);
  bool reached2 = reached1 && map.in_halo(g2, state.cell);

  int executed = 0;
  for (const NavAction action : actions) {
    if (executed >= kStepLimit) {
      rollout.timeout = true;
      break;
    }
    ++executed;
    if (action == NavAction::Stop) {
      rollout.stopped = true;
      break;
    }
    const StepResult step = nav_step(map, state, action);
    state = step.state;
    if (step.collision) ++rollout.collisions;
    if (step.moved) rollout.path_length += kCellSize;
    if (!reached1 && map.in_halo(g1, state.cell)) reached1 = true;
    if (reached1 && !reached2 && map.in_halo(g2, state.cell)) reached2 = true;
  }
  if (!rollout.stopped && !rollout.timeout && executed >= kStepLimit) rollout.timeout = true;

  rollout.end = state;
  rollout.progress = reached2 ? 1.0 : (reached1 ? 0.5 : 0.0);
  return rollout;
}

std::optional<core::Behavior> nav_behavior(const GridMap& map, const core::SemanticFrame& frame) {
  const auto goals = resolve_goals(frame, map);
  if (!goals) return std::nullopt;
  const auto plan = shortest_path_plan(map, *goals->g1, *goals->g2);
  if (!plan) return std::nullopt;
  return behavior_from_plan(map, *plan, frame);
}

core::Behavior behavior_from_plan(const GridMap& map, const NavPlan& plan,
                                  const core::SemanticFrame& frame) {
  core::Behavior behavior;
  for (const Cell c : plan.cells) {
    behavior.waypoints.push_back({(static_cast<double>(c.x) + 0.5) * kCellSize,
                                  (static_cast<double>(c.y) + 0.5) * kCellSize});
  }
  for (const NavAction action : plan.actions) behavior.actions.push_back(to_string(action));
  behavior.l_opt = plan.l_opt();
  std::ostringstream goal;
  goal << "reach the " << frame.source << ", then the " << frame.target;
  behavior.goal = goal.str();
  (void)map;
  return behavior;
}

}  // namespace csev::nav
