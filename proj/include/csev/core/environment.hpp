#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csev/core/policy_config.hpp"
#include "csev/core/types.hpp"

#include <json.hpp>

namespace csev::core {

struct ExecutionOutcome {
  double metric = 0.0;      // SPL (tabletop) or progress-to-goal (nav)
  bool success = false;
  double path_length = 0.0; // meters actually traveled
  bool timeout = false;
  ScenePtr end_scene;
};

struct PerturbResult {
  std::optional<TestInstance> instance;
  std::string reason;  // set when inapplicable or validity-rejected
};

// One evaluation domain: scene space, instruction grammar, dynamics, planner,
// and perturbation operators. Implementations are stateless; every method is
// deterministic in its arguments.
class Environment {
 public:
  virtual ~Environment() = default;

  [[nodiscard]] virtual EnvKind kind() const = 0;

  // Empty workspace used as the scene state before the first trial.
  [[nodiscard]] virtual ScenePtr staging_scene() const = 0;

  [[nodiscard]] virtual EvaluationSet sample_evaluation_set(int n, std::uint64_t seed) const = 0;

  // Rejects when a referent is missing from the scene, the goal predicate
  // already holds at the start state, or no executable plan exists.
  [[nodiscard]] virtual Feasibility check_feasible(const Instruction& instruction,
                                                   const Scene& scene) const = 0;

  // Expected behavior of a correct policy for this instruction in this scene.
  [[nodiscard]] virtual std::optional<Behavior> plan(const Instruction& instruction,
                                                     const Scene& scene) const = 0;

  // Runs the policy on `instance` starting from `scene` (the instance's own
  // scene under standard/contrast strategies; the carried-over scene under
  // limited intervention). The metric is computed against the expected
  // behavior recomputed for `scene`.
  [[nodiscard]] virtual ExecutionOutcome execute(const TestInstance& instance, ScenePtr scene,
                                                 const PolicyConfig& policy,
                                                 std::uint64_t seed) const = 0;

  // Default perturbation operator ids, in emission order.
  [[nodiscard]] virtual std::vector<std::string> perturbation_ops() const = 0;

  // Applies one operator to the base instance's nominal definition. Unknown
  // operator ids throw std::invalid_argument; inapplicable or validity-failed
  // emissions come back with a reason instead of an instance.
  [[nodiscard]] virtual PerturbResult perturb(const TestInstance& base, const std::string& op,
                                              std::uint64_t seed) const = 0;

  [[nodiscard]] virtual ScenePtr scene_from_json(const nlohmann::ordered_json& j) const = 0;
};

std::unique_ptr<Environment> make_environment(EnvKind kind);

inline EvaluationSet sample_evaluation_set(EnvKind kind, int n, std::uint64_t seed) {
  return make_environment(kind)->sample_evaluation_set(n, seed);
}

}  // namespace csev::core
