#include "csev/policies/policy.hpp"

#include <algorithm>

namespace csev::policies {

PolicyDecision decide(const core::PolicyConfig& config, const PolicyContext& context,
                      core::Rng& rng) {
  const double u_paraphrase = rng.uniform();
  const double u_fail = rng.uniform();
  const double u_direction = rng.uniform();
  const double u_swap = rng.uniform();

  const bool defect = config.kind == core::PolicyKind::Defect;
  const core::DefectKnobs& knobs = config.knobs;

  PolicyDecision decision;
  if (defect && context.non_canonical_surface && u_paraphrase < knobs.p_paraphrase_fail) {
    decision.mode = ExecutionMode::Stop;
    return decision;
  }

  double p_abort = config.kind == core::PolicyKind::Oracle ? 0.0 : knobs.p_fail;
  if (defect) {
    p_abort += knobs.distractor_penalty *
               static_cast<double>(context.unfamiliar_objects + context.displaced_objects);
  }
  p_abort = std::clamp(p_abort, 0.0, 1.0);
  if (u_fail < p_abort) {
    decision.mode = ExecutionMode::RandomWalk;
    return decision;
  }

  decision.invert_direction =
      defect && context.has_invertible_direction && u_direction < knobs.p_direction_invert;
  decision.swap_referents =
      defect && context.has_swappable_referents && u_swap < knobs.p_referent_swap;
  return decision;
}

}  // namespace csev::policies
