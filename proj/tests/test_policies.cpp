#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "csev/core/environment.hpp"
#include "csev/core/policy_config.hpp"
#include "csev/core/rng.hpp"
#include "csev/policies/policy.hpp"
#include "csev/strategies/runner.hpp"

using namespace csev;
using namespace csev::policies;

namespace {

core::PolicyConfig defect_config(double p_fail = 0.0, double p_dir = 0.0, double p_swap = 0.0,
                                 double p_para = 0.0, double distractor = 0.0) {
  core::PolicyConfig cfg;
  cfg.kind = core::PolicyKind::Defect;
  cfg.knobs.p_fail = p_fail;
  cfg.knobs.p_direction_invert = p_dir;
  cfg.knobs.p_referent_swap = p_swap;
  cfg.knobs.p_paraphrase_fail = p_para;
  cfg.knobs.distractor_penalty = distractor;
  cfg.validate();
  return cfg;
}

PolicyContext full_context() {
  PolicyContext context;
  context.has_invertible_direction = true;
  context.has_swappable_referents = true;
  context.non_canonical_surface = true;
  return context;
}

double failure_rate(const core::PolicyConfig& cfg, const PolicyContext& context, int trials) {
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    core::Rng rng(1000 + static_cast<std::uint64_t>(i));
    const PolicyDecision decision = decide(cfg, context, rng);
    if (decision.mode != ExecutionMode::FollowPlan || decision.invert_direction ||
        decision.swap_referents) {
      ++failures;
    }
  }
  return static_cast<double>(failures) / trials;
}

}  // namespace

TEST_CASE("oracle policy always follows the plan") {
  core::PolicyConfig oracle;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    core::Rng rng(seed);
    const PolicyDecision decision = decide(oracle, full_context(), rng);
    CHECK(decision.mode == ExecutionMode::FollowPlan);
    CHECK_FALSE(decision.invert_direction);
    CHECK_FALSE(decision.swap_referents);
  }
}

TEST_CASE("decide consumes exactly four uniforms regardless of outcome") {
  const std::vector<core::PolicyConfig> configs = {
      core::PolicyConfig{},
      core::policy_preset("noisy20"),
      defect_config(0.0, 1.0, 1.0, 1.0, 0.0),
      defect_config(1.0, 0.0, 0.0, 0.0, 0.5),
  };
  for (const core::PolicyConfig& cfg : configs) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      core::Rng used(seed);
      (void)decide(cfg, full_context(), used);
      core::Rng reference(seed);
      for (int k = 0; k < 4; ++k) (void)reference.uniform();
      CHECK(used.next_u64() == reference.next_u64());
    }
  }
}

TEST_CASE("noisy oracle aborts at its failure probability") {
  const core::PolicyConfig cfg = core::policy_preset("noisy20");
  int aborts = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    core::Rng rng(static_cast<std::uint64_t>(i));
    if (decide(cfg, PolicyContext{}, rng).mode == ExecutionMode::RandomWalk) ++aborts;
  }
  const double rate = static_cast<double>(aborts) / trials;
  CHECK(rate == doctest::Approx(0.2).epsilon(0.1));
}

TEST_CASE("semantic defects fire only when the context gate is open") {
  const core::PolicyConfig inverter = defect_config(0.0, 1.0, 0.0, 0.0, 0.0);
  const core::PolicyConfig swapper = defect_config(0.0, 0.0, 1.0, 0.0, 0.0);
  const core::PolicyConfig misparser = defect_config(0.0, 0.0, 0.0, 1.0, 0.0);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    core::Rng r1(seed), r2(seed), r3(seed), r4(seed);

    PolicyContext gated;
    gated.has_invertible_direction = true;
    CHECK(decide(inverter, gated, r1).invert_direction);
    CHECK_FALSE(decide(inverter, PolicyContext{}, r2).invert_direction);

    PolicyContext swappable;
    swappable.has_swappable_referents = true;
    CHECK(decide(swapper, swappable, r3).swap_referents);

    PolicyContext reworded;
    reworded.non_canonical_surface = true;
    CHECK(decide(misparser, reworded, r4).mode == ExecutionMode::Stop);
    core::Rng r5(seed);
    CHECK(decide(misparser, PolicyContext{}, r5).mode == ExecutionMode::FollowPlan);
  }
}

TEST_CASE("distractor penalty adds per unfamiliar or displaced object") {
  const core::PolicyConfig cfg = defect_config(0.1, 0.0, 0.0, 0.0, 0.2);
  PolicyContext none;
  PolicyContext two;
  two.unfamiliar_objects = 1;
  two.displaced_objects = 1;
  const double base_rate = failure_rate(cfg, none, 8000);
  const double loaded_rate = failure_rate(cfg, two, 8000);
  CHECK(base_rate == doctest::Approx(0.1).epsilon(0.2));
  CHECK(loaded_rate == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("per-seed knob monotonicity: raising a knob never un-fails a decision") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    core::Rng lo_rng(seed), hi_rng(seed);
    const bool lo_fail =
        decide(defect_config(0.3), full_context(), lo_rng).mode != ExecutionMode::FollowPlan;
    const bool hi_fail =
        decide(defect_config(0.6), full_context(), hi_rng).mode != ExecutionMode::FollowPlan;
    if (lo_fail) CHECK(hi_fail);
  }
}

TEST_CASE("policy config validation rejects misused knobs") {
  core::PolicyConfig oracle;
  oracle.knobs.p_fail = 0.1;
  CHECK_THROWS_AS(oracle.validate(), std::invalid_argument);

  core::PolicyConfig noisy;
  noisy.kind = core::PolicyKind::NoisyOracle;
  noisy.knobs.p_fail = 0.2;
  CHECK_NOTHROW(noisy.validate());
  noisy.knobs.p_direction_invert = 0.5;
  CHECK_THROWS_AS(noisy.validate(), std::invalid_argument);

  core::PolicyConfig defect;
  defect.kind = core::PolicyKind::Defect;
  defect.knobs.p_fail = 1.5;
  CHECK_THROWS_AS(defect.validate(), std::invalid_argument);
}

TEST_CASE("named presets resolve and unknown names are rejected") {
  for (const std::string& name : core::policy_preset_names()) {
    CHECK_NOTHROW((void)core::policy_preset(name));
  }
  CHECK_THROWS_AS((void)core::policy_preset("unknown"), std::invalid_argument);
}

TEST_CASE("knob monotonicity holds for whole-run mean metrics") {
  // Raising one defect knob never raises the strategy-level mean metric.
  const core::EvaluationSet tabletop_set =
      core::sample_evaluation_set(core::EnvKind::Tabletop, 25, 2);
  const core::EvaluationSet nav_set = core::sample_evaluation_set(core::EnvKind::Nav, 5, 2);

  core::StrategyPlan contrast;
  contrast.kind = core::StrategyKind::ContrastSet;
  contrast.name = "contrast";
  contrast.budget = 1e9;

  const auto mean_at = [&](const core::EvaluationSet& set,
                           const std::vector<std::string>& ops, const core::PolicyConfig& cfg,
                           std::uint64_t seed) {
    core::StrategyPlan plan = contrast;
    plan.perturbations = ops;
    return strategies::estimate_metric(strategies::run_contrast(set, cfg, plan, seed));
  };

  const std::vector<std::string> tabletop_ops = {"swap_referents", "invert_direction",
                                                 "move_target", "move_source"};
  const std::vector<std::string> nav_ops = {"reword", "change_goal", "move_passive",
                                            "alter_path"};
  const std::vector<double> levels = {0.0, 0.5, 1.0};

  for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    std::vector<double> by_fail, by_dir, by_swap, by_para, by_distract;
    for (const double level : levels) {
      by_fail.push_back(mean_at(tabletop_set, tabletop_ops, defect_config(level), seed));
      by_dir.push_back(mean_at(tabletop_set, tabletop_ops, defect_config(0, level), seed));
      by_swap.push_back(mean_at(tabletop_set, tabletop_ops, defect_config(0, 0, level), seed));
      by_para.push_back(mean_at(nav_set, nav_ops, defect_config(0, 0, 0, level), seed));
      by_distract.push_back(
          mean_at(nav_set, nav_ops, defect_config(0, 0, 0, 0, level * 0.4), seed));
    }
    for (const auto* series : {&by_fail, &by_dir, &by_swap, &by_para, &by_distract}) {
      for (std::size_t k = 1; k < series->size(); ++k) {
        CHECK((*series)[k] <= (*series)[k - 1] + 1e-12);
      }
    }
  }
}
