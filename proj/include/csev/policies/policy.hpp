#pragma once

#include "csev/core/policy_config.hpp"
#include "csev/core/rng.hpp"

namespace csev::policies {

// What the policy can observe about the trial before acting. Environments
// fill this from the instruction and the concrete start scene; the decision
// layer itself never touches scenes.
struct PolicyContext {
  bool has_invertible_direction = false;  // frame carries a direction word or an invertible region
  bool has_swappable_referents = false;   // frame names both a source and a target object
  bool non_canonical_surface = false;     // any wording other than template 0 / synonym 0
  int unfamiliar_objects = 0;             // passive objects whose class is off the familiarity list
  int displaced_objects = 0;              // objects away from where this instance nominally put them
};

enum class ExecutionMode { FollowPlan, RandomWalk, Stop };

struct PolicyDecision {
  ExecutionMode mode = ExecutionMode::FollowPlan;
  bool invert_direction = false;  // execute the mirrored direction/region
  bool swap_referents = false;    // act on the target as if it were the source
};

// Number of dynamics steps a random-walk abort takes before stopping.
inline constexpr int kRandomWalkSteps = 20;

// Resolves the configured defect knobs against one trial's context. Exactly
// four uniforms are always drawn, in a fixed order, whether or not a knob or
// context gate is active; raising one knob therefore flips individual
// outcomes without reshuffling the random stream of later draws.
PolicyDecision decide(const core::PolicyConfig& config, const PolicyContext& context,
                      core::Rng& rng);

}  // namespace csev::policies
