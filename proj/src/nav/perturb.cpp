#include "csev/nav/perturb.hpp"

#include <algorithm>
#include <stdexcept>

#include "csev/core/cost.hpp"
#include "csev/core/rng.hpp"
#include "csev/nav/lang.hpp"
#include "csev/nav/planner.hpp"
#include "csev/nav/sampler.hpp"

namespace csev::nav {

using core::Rng;

namespace {

constexpr int kPlacementAttempts = 50;

const GridMap& map_of(const core::TestInstance& instance) {
  const auto* map = dynamic_cast<const GridMap*>(instance.scene.get());
  if (map == nullptr) throw std::invalid_argument("instance scene is not a nav map");
  return *map;
}

NavPlan plan_from_actions(const GridMap& map, const std::vector<NavAction>& actions) {
  NavPlan plan;
  plan.actions = actions;
  plan.cells.push_back(map.start);
  RobotState state{map.start, map.start_heading};
  for (const NavAction action : actions) {
    const StepResult step = nav_step(map, state, action);
    state = step.state;
    if (step.moved) {
      plan.cells.push_back(state.cell);
      ++plan.forward_count;
    }
  }
  return plan;
}

core::TestInstance derive(const core::TestInstance& base, const std::string& op,
                          core::PerturbationTag tag, core::ScenePtr scene) {
  core::TestInstance out;
  out.id = base.id + "#" + op;
  out.instruction = base.instruction;
  out.scene = std::move(scene);
  out.expected = base.expected;
  out.tag = tag;
  out.parent_id = base.id;
  return out;
}

core::PerturbResult reword(const core::TestInstance& base, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const int template_id = rng.uniform_int(kTemplateCount);
    const int paraphrase_id = 1 + rng.uniform_int(kParaphraseCount - 1);
    if (template_id == base.instruction.template_id &&
        paraphrase_id == base.instruction.paraphrase_id) {
      continue;
    }
    const std::string surface =
        render_nav_surface(base.instruction.frame, template_id, paraphrase_id);
    if (surface == base.instruction.surface) continue;

    core::TestInstance out = derive(base, "reword", {core::TagKind::DL, 0}, base.scene);
    out.instruction.surface = surface;
    out.instruction.template_id = template_id;
    out.instruction.paraphrase_id = paraphrase_id;
    return {std::move(out), ""};
  }
  return {std::nullopt, "inapplicable: no alternative wording available"};
}

core::PerturbResult change_goal(const core::TestInstance& base, std::uint64_t seed) {
  const GridMap& map = map_of(base);
  const auto goals = resolve_goals(base.instruction.frame, map);
  if (!goals) return {std::nullopt, "referent missing or frame invalid"};
  const auto base_plan = shortest_path_plan(map, *goals->g1, *goals->g2);
  if (!base_plan) return {std::nullopt, "no plan: a subgoal is unreachable"};

  std::vector<const Furniture*> alternatives;
  for (const Furniture& f : map.furniture) {
    if (f.role != FurnitureRole::GoalCandidate) continue;
    if (f.cls == base.instruction.frame.source || f.cls == base.instruction.frame.target) {
      continue;
    }
    alternatives.push_back(&f);
  }
  if (alternatives.empty()) {
    return {std::nullopt, "inapplicable: no alternative final goal in the scene"};
  }
  Rng rng(seed);
  rng.shuffle(alternatives);

  // Keep the approach to the first subgoal action-identical: splice the
  // original prefix onto an optimal continuation and accept only when the
  // splice is itself a shortest path for the new goal pair.
  const int prefix_len = prefix_actions_to_halo(map, *goals->g1, *base_plan);
  RobotState at{map.start, map.start_heading};
  for (int i = 0; i < prefix_len; ++i) {
    at = nav_step(map, at, base_plan->actions[static_cast<std::size_t>(i)]).state;
  }

  for (const Furniture* alt : alternatives) {
    const auto suffix = shortest_suffix(map, at, *alt);
    const auto free_plan = shortest_path_plan(map, *goals->g1, *alt);
    if (!suffix || !free_plan) continue;
    if (prefix_len + suffix->actions.size() != free_plan->actions.size()) continue;

    std::vector<NavAction> actions(base_plan->actions.begin(),
                                   base_plan->actions.begin() + prefix_len);
    actions.insert(actions.end(), suffix->actions.begin(), suffix->actions.end());

    core::SemanticFrame frame = base.instruction.frame;
    frame.target = alt->cls;
    core::Instruction instruction = base.instruction;
    instruction.frame = frame;
    instruction.surface =
        render_nav_surface(frame, instruction.template_id, instruction.paraphrase_id);
    if (!nav_feasible(instruction, map).ok) continue;

    core::TestInstance out = derive(base, "change_goal", {core::TagKind::DLB, 0}, base.scene);
    out.instruction = instruction;
    out.expected = behavior_from_plan(map, plan_from_actions(map, actions), frame);
    return {std::move(out), ""};
  }
  return {std::nullopt, "no alternative final goal preserves the approach"};
}

bool footprint_clear(const GridMap& map, const Furniture& moved) {
  if (!map.in_bounds({moved.x0, moved.y0}) || !map.in_bounds({moved.x1, moved.y1})) return false;
  for (const Furniture& f : map.furniture) {
    if (f.id == moved.id) continue;
    const bool disjoint =
        moved.x1 < f.x0 || f.x1 < moved.x0 || moved.y1 < f.y0 || f.y1 < moved.y0;
    if (!disjoint) return false;
  }
  if (moved.covers(map.start)) return false;
  return true;
}

// Applies `edit` to a copy of the map, keeping furniture sorted.
GridMap edited_map(const GridMap& map, const Furniture& replacement, bool add) {
  GridMap next = map;
  if (add) {
    next.furniture.push_back(replacement);
  } else {
    for (Furniture& f : next.furniture) {
      if (f.id == replacement.id) f = replacement;
    }
  }
  next.sort_furniture();
  return next;
}

std::string fresh_passive_id(const GridMap& map, const std::string& cls) {
  for (int n = 1;; ++n) {
    const std::string id = cls + "-" + std::to_string(n);
    if (map.find(id) == nullptr) return id;
  }
}

const Furniture* seeded_passive(const GridMap& map, Rng& rng) {
  std::vector<const Furniture*> passives;
  for (const Furniture& f : map.furniture) {
    if (f.role == FurnitureRole::Passive) passives.push_back(&f);
  }
  if (passives.empty()) return nullptr;
  return passives[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(passives.size())))];
}

int chebyshev_to_cells(Cell c, const std::vector<Cell>& cells) {
  int best = 1 << 20;
  for (const Cell& p : cells) {
    best = std::min(best, std::max(std::abs(c.x - p.x), std::abs(c.y - p.y)));
  }
  return best;
}

core::PerturbResult move_passive(const core::TestInstance& base, std::uint64_t seed) {
  const GridMap& map = map_of(base);
  const auto goals = resolve_goals(base.instruction.frame, map);
  if (!goals) return {std::nullopt, "referent missing or frame invalid"};
  const auto base_plan = shortest_path_plan(map, *goals->g1, *goals->g2);
  if (!base_plan) return {std::nullopt, "no plan: a subgoal is unreachable"};

  Rng rng(seed);
  for (int attempt = 0; attempt < 2 * kPlacementAttempts; ++attempt) {
    const bool add = rng.uniform() < 0.5;
    Furniture candidate;
    if (add) {
      const std::string cls = "plant";
      candidate = Furniture{fresh_passive_id(map, cls), cls, 0, 0, 0, 0,
                            FurnitureRole::Passive};
    } else {
      const Furniture* picked = seeded_passive(map, rng);
      if (picked == nullptr) continue;
      candidate = *picked;
    }
    const int w = candidate.x1 - candidate.x0;
    const int h = candidate.y1 - candidate.y0;
    const int x = rng.uniform_int(map.width - w);
    const int y = rng.uniform_int(map.height - h);
    candidate.x0 = x;
    candidate.x1 = x + w;
    candidate.y0 = y;
    candidate.y1 = y + h;

    // Stay two cells clear of the reference route so the edit cannot shadow
    // the planner's tie-breaking near the path.
    if (chebyshev_to_cells({candidate.x0, candidate.y0}, base_plan->cells) < 2) continue;

    GridMap next = edited_map(map, candidate, add);
    if (!footprint_clear(next, *next.find(candidate.id))) continue;
    if (core::scene_diff_cost(map, next) == 0.0) continue;  // relocation must actually move

    const auto next_goals = resolve_goals(base.instruction.frame, next);
    if (!next_goals) continue;
    const auto next_plan = shortest_path_plan(next, *next_goals->g1, *next_goals->g2);
    if (!next_plan || next_plan->actions != base_plan->actions) continue;

    core::TestInstance out = derive(base, "move_passive", {core::TagKind::DS, 0},
                                    std::make_shared<GridMap>(std::move(next)));
    return {std::move(out), ""};
  }
  return {std::nullopt, "no placement preserves the route"};
}

core::PerturbResult alter_path(const core::TestInstance& base, std::uint64_t seed) {
  const GridMap& map = map_of(base);
  const auto goals = resolve_goals(base.instruction.frame, map);
  if (!goals) return {std::nullopt, "referent missing or frame invalid"};
  const auto base_plan = shortest_path_plan(map, *goals->g1, *goals->g2);
  if (!base_plan) return {std::nullopt, "no plan: a subgoal is unreachable"};

  Rng rng(seed);
  const bool move_goal_first = rng.uniform() < 0.5;

  const auto try_emit = [&](GridMap next) -> std::optional<core::TestInstance> {
    if (!nav_feasible(base.instruction, next).ok) return std::nullopt;
    const auto next_goals = resolve_goals(base.instruction.frame, next);
    const auto next_plan = shortest_path_plan(next, *next_goals->g1, *next_goals->g2);
    if (!next_plan || next_plan->actions == base_plan->actions) return std::nullopt;
    core::TestInstance out = derive(base, "alter_path", {core::TagKind::DSB, 0},
                                    std::make_shared<GridMap>(std::move(next)));
    out.expected = *nav_behavior(map_of(out), out.instruction.frame);
    return out;
  };

  const auto relocate_goal = [&]() -> std::optional<core::TestInstance> {
    const Furniture& g2 = *goals->g2;
    const int w = g2.x1 - g2.x0;
    const int h = g2.y1 - g2.y0;
    for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
      Furniture moved = g2;
      const int x = rng.uniform_int(map.width - w);
      const int y = rng.uniform_int(map.height - h);
      if (std::max(std::abs(x - g2.x0), std::abs(y - g2.y0)) < kMinGoalMoveCells) continue;
      moved.x0 = x;
      moved.x1 = x + w;
      moved.y0 = y;
      moved.y1 = y + h;
      GridMap next = edited_map(map, moved, false);
      if (!footprint_clear(next, *next.find(moved.id))) continue;
      if (auto out = try_emit(std::move(next))) return out;
    }
    return std::nullopt;
  };

  const auto block_route = [&]() -> std::optional<core::TestInstance> {
    // Candidate cells: the route itself, robot start excluded.
    std::vector<Cell> route(base_plan->cells.begin() + 1, base_plan->cells.end());
    if (route.empty()) return std::nullopt;
    for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
      const Cell at = route[static_cast<std::size_t>(
          rng.uniform_int(static_cast<int>(route.size())))];
      const bool add = rng.uniform() < 0.5;
      Furniture blocker;
      if (add) {
        blocker = Furniture{fresh_passive_id(map, "plant"), "plant", at.x, at.y, at.x, at.y,
                            FurnitureRole::Passive};
      } else {
        const Furniture* picked = seeded_passive(map, rng);
        if (picked == nullptr || (picked->x1 != picked->x0 || picked->y1 != picked->y0)) {
          continue;
        }
        blocker = *picked;
        blocker.x0 = blocker.x1 = at.x;
        blocker.y0 = blocker.y1 = at.y;
      }
      GridMap next = edited_map(map, blocker, add);
      if (!footprint_clear(next, *next.find(blocker.id))) continue;
      if (auto out = try_emit(std::move(next))) return out;
    }
    return std::nullopt;
  };

  for (int round = 0; round < 2; ++round) {
    const bool use_goal_move = (round == 0) == move_goal_first;
    if (auto out = use_goal_move ? relocate_goal() : block_route()) {
      return {std::move(*out), ""};
    }
  }
  return {std::nullopt, "no scene edit changes the route"};
}

}  // namespace

core::PerturbationTag nav_tag_for_op(const std::string& op) {
  if (op == "reword") return {core::TagKind::DL, 0};
  if (op == "change_goal") return {core::TagKind::DLB, 0};
  if (op == "move_passive") return {core::TagKind::DS, 0};
  if (op == "alter_path") return {core::TagKind::DSB, 0};
  throw std::invalid_argument("unknown nav perturbation op: " + op);
}

core::PerturbResult nav_perturb(const core::TestInstance& base, const std::string& op,
                                std::uint64_t seed) {
  if (op == "reword") return reword(base, seed);
  if (op == "change_goal") return change_goal(base, seed);
  if (op == "move_passive") return move_passive(base, seed);
  if (op == "alter_path") return alter_path(base, seed);
  throw std::invalid_argument("unknown nav perturbation op: " + op);
}

}  // namespace csev::nav
