#include "csev/tabletop/env.hpp"

#include <cmath>
#include <stdexcept>

#include "csev/core/cost.hpp"
#include "csev/core/rng.hpp"
#include "csev/policies/policy.hpp"
#include "csev/tabletop/perturb.hpp"
#include "csev/tabletop/planner.hpp"
#include "csev/tabletop/sampler.hpp"
#include "csev/tabletop/task.hpp"

namespace csev::tabletop {

using core::Rng;
using core::Vec2;

namespace {

const Board& as_board(const core::Scene& scene) {
  const auto* board = dynamic_cast<const Board*>(&scene);
  if (board == nullptr) throw std::invalid_argument("scene is not a tabletop board");
  return *board;
}

bool frame_has_invertible_direction(const core::SemanticFrame& frame) {
  if (!frame.direction.empty()) return true;
  return !frame.region.empty() && inverted_region(frame.region).has_value();
}

// Frame the policy acts on after its decision: referents exchanged and/or the
// direction or region mirrored.
core::SemanticFrame believed_frame(const core::SemanticFrame& frame,
                                   const policies::PolicyDecision& decision) {
  core::SemanticFrame believed = frame;
  if (decision.swap_referents) std::swap(believed.source, believed.target);
  if (decision.invert_direction) {
    if (!believed.direction.empty()) {
      believed.direction = inverted_direction(believed.direction);
    } else if (!believed.region.empty()) {
      believed.region = *inverted_region(believed.region);
    }
  }
  return believed;
}

core::ExecutionOutcome score(const Board& end, const BoardPredicate& truth, double l_opt,
                             double l_taken, bool timeout) {
  core::ExecutionOutcome outcome;
  outcome.success = truth(end);
  outcome.path_length = l_taken;
  outcome.timeout = timeout;
  outcome.metric = core::spl(outcome.success, l_opt, l_taken);
  outcome.end_scene = std::make_shared<Board>(end);
  return outcome;
}

}  // namespace

core::ScenePtr TabletopEnv::staging_scene() const {
  static const core::ScenePtr empty = std::make_shared<Board>();
  return empty;
}

core::EvaluationSet TabletopEnv::sample_evaluation_set(int n, std::uint64_t seed) const {
  return sample_tabletop_set(n, seed);
}

core::Feasibility TabletopEnv::check_feasible(const core::Instruction& instruction,
                                              const core::Scene& scene) const {
  return tabletop_feasible(instruction, as_board(scene));
}

std::optional<core::Behavior> TabletopEnv::plan(const core::Instruction& instruction,
                                                const core::Scene& scene) const {
  return plan_behavior(as_board(scene), instruction.frame);
}

core::ExecutionOutcome TabletopEnv::execute(const core::TestInstance& instance,
                                            core::ScenePtr scene,
                                            const core::PolicyConfig& policy,
                                            std::uint64_t seed) const {
  const Board& board = as_board(*scene);
  const auto truth = goal_predicate(instance.instruction.frame, board);
  const auto truth_plan = optimal_plan(board, instance.instruction.frame);
  if (!truth || !truth_plan) {
    throw std::invalid_argument("execute: instance is infeasible in the given scene");
  }
  const double l_opt = truth_plan->l_opt();

  policies::PolicyContext context;
  context.has_invertible_direction = frame_has_invertible_direction(instance.instruction.frame);
  context.has_swappable_referents = !instance.instruction.frame.target.empty();
  context.non_canonical_surface = instance.instruction.paraphrase_id != 0;
  context.displaced_objects =
      core::displaced_object_count(board, *instance.scene, kDisplacedTolerance);

  Rng rng = Rng(seed).fork("policy", policy.seed_stream);
  const policies::PolicyDecision decision = policies::decide(policy, context, rng);

  if (decision.mode == policies::ExecutionMode::Stop) {
    return score(board, *truth, l_opt, 0.0, false);
  }

  if (decision.mode == policies::ExecutionMode::RandomWalk) {
    Board walked = board;
    double traveled = 0.0;
    for (int step = 0; step < policies::kRandomWalkSteps; ++step) {
      const double angle = rng.uniform(0.0, 2.0 * M_PI);
      const Vec2 before = walked.pusher;
      step_dynamics(walked, Vec2{std::cos(angle), std::sin(angle)} * kMaxStep);
      traveled += core::distance(before, walked.pusher);
    }
    return score(walked, *truth, l_opt, traveled, false);
  }

  const core::SemanticFrame believed = believed_frame(instance.instruction.frame, decision);
  const auto believed_goal = goal_predicate(believed, board);
  const auto believed_plan = optimal_plan(board, believed);
  if (!believed_goal || !believed_plan) {
    // The policy's misread of the instruction has no executable plan; it
    // gives up without moving.
    return score(board, *truth, l_opt, 0.0, false);
  }

  const RolloutResult rollout =
      run_waypoints(board, believed_plan->waypoints, believed_plan->approach_end, *believed_goal);
  return score(rollout.end, *truth, l_opt, rollout.path_length, rollout.timeout);
}

std::vector<std::string> TabletopEnv::perturbation_ops() const {
  return tabletop_perturbation_ops();
}

core::PerturbResult TabletopEnv::perturb(const core::TestInstance& base, const std::string& op,
                                         std::uint64_t seed) const {
  return tabletop_perturb(base, op, seed);
}

core::ScenePtr TabletopEnv::scene_from_json(const nlohmann::ordered_json& j) const {
  return std::make_shared<Board>(Board::from_json(j));
}

}  // namespace csev::tabletop
