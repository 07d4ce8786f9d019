#pragma once

#include <cstdint>
#include <vector>

#include "csev/core/environment.hpp"
#include "csev/core/policy_config.hpp"
#include "csev/core/trial.hpp"
#include "csev/core/types.hpp"

namespace csev::strategies {

// Every runner executes trials against a single carried simulator scene and
// charges each trial the scene-preparation cost incurred before it runs. A
// trial's reset_cost is the configured cost model applied to the diff between
// the carried scene and the scene the trial actually starts from; the carried
// scene then becomes the trial's end state. The first trial of a run is
// charged from the environment's staging scene.

// Executes the whole set in seed-shuffled order, resetting to each instance's
// own start scene before every trial. `plan.repetitions` copies of an
// instance run consecutively.
core::RunLog run_standard(const core::EvaluationSet& set, const core::PolicyConfig& policy,
                          const core::StrategyPlan& plan, std::uint64_t seed);

// Executes the set in seed-shuffled order against the carried scene, resetting
// to an instance's own scene only when the carried scene is infeasible for its
// instruction. Non-reset trials cost nothing; metrics are scored against the
// expected behavior recomputed for the scene the trial actually ran in.
core::RunLog run_limited_intervention(const core::EvaluationSet& set,
                                      const core::PolicyConfig& policy,
                                      const core::StrategyPlan& plan, std::uint64_t seed);

// Executes each base instance followed by its perturbed variants, one variant
// per operator in `plan.perturbations`, stopping after the first trial that
// pushes cumulative cost past `plan.budget`. Variants are derived from the
// base's own definition, never from a previously perturbed instance, and
// operators that cannot produce a valid variant are logged as skips.
core::RunLog run_contrast(const core::EvaluationSet& set, const core::PolicyConfig& policy,
                          const core::StrategyPlan& plan, std::uint64_t seed);

// Dispatches on plan.kind after plan.validate().
core::RunLog run_plan(const core::EvaluationSet& set, const core::PolicyConfig& policy,
                      const core::StrategyPlan& plan, std::uint64_t seed);

// Mean trial metric over the whole log; 0 when the log is empty.
double estimate_metric(const core::RunLog& log);

// Number of leading trials whose cumulative cost stays within `budget`.
int trials_within_budget(const core::RunLog& log, double budget);

}  // namespace csev::strategies
