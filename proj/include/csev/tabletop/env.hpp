#pragma once

#include "csev/core/environment.hpp"
#include "csev/tabletop/board.hpp"

namespace csev::tabletop {

// Position drift beyond which an object counts as displaced from an
// instance's nominal layout (same tolerance as the goal predicate).
inline constexpr double kDisplacedTolerance = 0.05;

class TabletopEnv final : public core::Environment {
 public:
  [[nodiscard]] core::EnvKind kind() const override { return core::EnvKind::Tabletop; }
  [[nodiscard]] core::ScenePtr staging_scene() const override;
  [[nodiscard]] core::EvaluationSet sample_evaluation_set(int n,
                                                          std::uint64_t seed) const override;
  [[nodiscard]] core::Feasibility check_feasible(const core::Instruction& instruction,
                                                 const core::Scene& scene) const override;
  [[nodiscard]] std::optional<core::Behavior> plan(const core::Instruction& instruction,
                                                   const core::Scene& scene) const override;
  [[nodiscard]] core::ExecutionOutcome execute(const core::TestInstance& instance,
                                               core::ScenePtr scene,
                                               const core::PolicyConfig& policy,
                                               std::uint64_t seed) const override;
  [[nodiscard]] std::vector<std::string> perturbation_ops() const override;
  [[nodiscard]] core::PerturbResult perturb(const core::TestInstance& base, const std::string& op,
                                            std::uint64_t seed) const override;
  [[nodiscard]] core::ScenePtr scene_from_json(const nlohmann::ordered_json& j) const override;
};

}  // namespace csev::tabletop
