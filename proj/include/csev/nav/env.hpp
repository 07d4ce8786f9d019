#pragma once

#include "csev/core/environment.hpp"
#include "csev/nav/map.hpp"

namespace csev::nav {

// Position drift beyond which a furniture item counts as displaced from an
// instance's nominal layout. Any whole-cell move exceeds it.
inline constexpr double kDisplacedTolerance = 0.05;

class NavEnv final : public core::Environment {
 public:
  [[nodiscard]] core::EnvKind kind() const override { return core::EnvKind::Nav; }
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

}  // namespace csev::nav
