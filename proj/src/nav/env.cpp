#include "csev/nav/env.hpp"

#include <stdexcept>

#include "csev/core/cost.hpp"
#include "csev/core/rng.hpp"
#include "csev/nav/lang.hpp"
#include "csev/nav/perturb.hpp"
#include "csev/nav/planner.hpp"
#include "csev/nav/sampler.hpp"
#include "csev/policies/policy.hpp"

namespace csev::nav {

using core::Rng;

namespace {

const GridMap& as_map(const core::Scene& scene) {
  const auto* map = dynamic_cast<const GridMap*>(&scene);
  if (map == nullptr) throw std::invalid_argument("scene is not a nav map");
  return *map;
}

core::ExecutionOutcome outcome_of(const GridMap& map, const NavRollout& rollout) {
  core::ExecutionOutcome outcome;
  outcome.metric = rollout.progress;
  outcome.success = rollout.progress == 1.0;
  outcome.path_length = rollout.path_length;
  outcome.timeout = rollout.timeout;
  GridMap end = map;
  end.start = rollout.end.cell;
  end.start_heading = rollout.end.heading;
  outcome.end_scene = std::make_shared<GridMap>(std::move(end));
  return outcome;
}

}  // namespace

core::ScenePtr NavEnv::staging_scene() const {
  static const core::ScenePtr empty = [] {
    GridMap map;
    map.start = {kDefaultGridSize / 2, kDefaultGridSize / 2};
    return std::make_shared<GridMap>(std::move(map));
  }();
  return empty;
}

core::EvaluationSet NavEnv::sample_evaluation_set(int n, std::uint64_t seed) const {
  return sample_nav_set(n, seed);
}

core::Feasibility NavEnv::check_feasible(const core::Instruction& instruction,
                                         const core::Scene& scene) const {
  return nav_feasible(instruction, as_map(scene));
}

std::optional<core::Behavior> NavEnv::plan(const core::Instruction& instruction,
                                           const core::Scene& scene) const {
  return nav_behavior(as_map(scene), instruction.frame);
}

core::ExecutionOutcome NavEnv::execute(const core::TestInstance& instance, core::ScenePtr scene,
                                       const core::PolicyConfig& policy,
                                       std::uint64_t seed) const {
  const GridMap& map = as_map(*scene);
  const auto goals = resolve_goals(instance.instruction.frame, map);
  if (!goals || !shortest_path_plan(map, *goals->g1, *goals->g2)) {
    throw std::invalid_argument("execute: instance is infeasible in the given scene");
  }

  policies::PolicyContext context;
  context.has_invertible_direction = false;
  context.has_swappable_referents = true;
  context.non_canonical_surface = instance.instruction.paraphrase_id != 0;
  for (const Furniture& f : map.furniture) {
    if (!is_familiar_class(f.cls)) ++context.unfamiliar_objects;
  }
  context.displaced_objects =
      core::displaced_object_count(map, *instance.scene, kDisplacedTolerance);

  Rng rng = Rng(seed).fork("policy", policy.seed_stream);
  const policies::PolicyDecision decision = policies::decide(policy, context, rng);

  std::vector<NavAction> actions;
  if (decision.mode == policies::ExecutionMode::Stop) {
    actions = {NavAction::Stop};
  } else if (decision.mode == policies::ExecutionMode::RandomWalk) {
    for (int i = 0; i < policies::kRandomWalkSteps; ++i) {
      const int move = rng.uniform_int(3);
      actions.push_back(move == 0 ? NavAction::Forward
                                  : (move == 1 ? NavAction::Left : NavAction::Right));
    }
    actions.push_back(NavAction::Stop);
  } else {
    const Furniture* first = decision.swap_referents ? goals->g2 : goals->g1;
    const Furniture* second = decision.swap_referents ? goals->g1 : goals->g2;
    const auto believed = shortest_path_plan(map, *first, *second);
    // A misread with no executable route ends the attempt on the spot.
    actions = believed ? believed->actions : std::vector<NavAction>{NavAction::Stop};
  }

  return outcome_of(map, run_nav_actions(map, actions, *goals->g1, *goals->g2));
}

std::vector<std::string> NavEnv::perturbation_ops() const { return nav_perturbation_ops(); }

core::PerturbResult NavEnv::perturb(const core::TestInstance& base, const std::string& op,
                                    std::uint64_t seed) const {
  return nav_perturb(base, op, seed);
}

core::ScenePtr NavEnv::scene_from_json(const nlohmann::ordered_json& j) const {
  return std::make_shared<GridMap>(GridMap::from_json(j));
}

}  // namespace csev::nav
