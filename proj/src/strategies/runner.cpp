#include "csev/strategies/runner.hpp"

#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "csev/core/cost.hpp"
#include "csev/core/rng.hpp"

namespace csev::strategies {

namespace {

using core::EvaluationSet;
using core::PolicyConfig;
using core::RunLog;
using core::ScenePtr;
using core::StrategyKind;
using core::StrategyPlan;
using core::TestInstance;
using core::TrialRecord;

double to_ledger_units(const core::SceneDiff& diff, core::CostModel model) {
  if (model == core::CostModel::TimeProxy) {
    return core::time_proxy_cost(diff.distance_m, diff.objects_touched());
  }
  return diff.distance_m;
}

// Shared trial loop state. The carried scene is the end state of the most
// recent execution; every reset cost is measured from it.
class Runner {
 public:
  Runner(const EvaluationSet& set, const PolicyConfig& policy, const StrategyPlan& plan,
         std::uint64_t seed)
      : policy_(policy), rng_(seed), env_(core::make_environment(set.env)) {
    plan.validate();
    policy.validate();
    log_.env = set.env;
    log_.plan = plan;
    log_.master_seed = seed;
    current_ = env_->staging_scene();
  }

  core::Environment& env() { return *env_; }
  RunLog& log() { return log_; }
  const ScenePtr& current() const { return current_; }
  const StrategyPlan& plan() const { return log_.plan; }

  [[nodiscard]] std::vector<std::size_t> shuffled_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    core::Rng shuffler = rng_.fork("order");
    shuffler.shuffle(order);
    return order;
  }

  [[nodiscard]] std::uint64_t perturb_seed(const std::string& op, std::size_t base_index) const {
    return rng_.fork("perturb:" + op, base_index).seed();
  }

  // Charges the diff from the carried scene to `start`, runs the policy, and
  // advances the carried scene to the execution's end state.
  void run_one(const TestInstance& instance, const ScenePtr& start, bool scene_reset,
               int repetition) {
    const core::SceneDiff diff = core::scene_diff(*current_, *start);
    const std::uint64_t trial_seed = rng_.fork("trial", log_.trials.size()).seed();
    const core::ExecutionOutcome outcome = env_->execute(instance, start, policy_, trial_seed);

    TrialRecord record;
    record.instance_id = instance.id;
    record.tag = instance.tag;
    record.metric = outcome.metric;
    record.reset_cost = to_ledger_units(diff, log_.plan.cost_model);
    record.reset_distance_m = diff.distance_m;
    record.objects_touched = diff.objects_touched();
    record.path_length = outcome.path_length;
    record.success = outcome.success;
    record.timeout = outcome.timeout;
    record.scene_reset = scene_reset;
    record.repetition = repetition;
    record.seed = trial_seed;
    log_.push(std::move(record));
    log_.scene_trace.emplace_back(start, outcome.end_scene);
    current_ = outcome.end_scene;
  }

  [[nodiscard]] bool over_budget() const {
    return log_.plan.kind == StrategyKind::ContrastSet && log_.total_cost() > log_.plan.budget;
  }

 private:
  PolicyConfig policy_;
  core::Rng rng_;
  std::unique_ptr<core::Environment> env_;
  RunLog log_;
  ScenePtr current_;
};

void require_kind(const StrategyPlan& plan, StrategyKind kind) {
  if (plan.kind != kind) {
    throw std::invalid_argument("plan kind does not match the requested runner");
  }
}

}  // namespace

RunLog run_standard(const EvaluationSet& set, const PolicyConfig& policy,
                    const StrategyPlan& plan, std::uint64_t seed) {
  require_kind(plan, StrategyKind::Standard);
  Runner runner(set, policy, plan, seed);
  for (const std::size_t idx : runner.shuffled_order(set.instances.size())) {
    const TestInstance& instance = set.instances[idx];
    for (int rep = 0; rep < plan.repetitions; ++rep) {
      runner.run_one(instance, instance.scene, true, rep);
    }
  }
  return std::move(runner.log());
}

RunLog run_limited_intervention(const EvaluationSet& set, const PolicyConfig& policy,
                                const StrategyPlan& plan, std::uint64_t seed) {
  require_kind(plan, StrategyKind::LimitedIntervention);
  Runner runner(set, policy, plan, seed);
  for (const std::size_t idx : runner.shuffled_order(set.instances.size())) {
    const TestInstance& instance = set.instances[idx];
    for (int rep = 0; rep < plan.repetitions; ++rep) {
      const core::Feasibility feasible =
          runner.env().check_feasible(instance.instruction, *runner.current());
      if (feasible.ok) {
        runner.run_one(instance, runner.current(), false, rep);
      } else {
        runner.run_one(instance, instance.scene, true, rep);
      }
    }
  }
  return std::move(runner.log());
}

RunLog run_contrast(const EvaluationSet& set, const PolicyConfig& policy,
                    const StrategyPlan& plan, std::uint64_t seed) {
  require_kind(plan, StrategyKind::ContrastSet);
  Runner runner(set, policy, plan, seed);
  for (std::size_t i = 0; i < set.instances.size(); ++i) {
    const TestInstance& base = set.instances[i];
    for (int rep = 0; rep < plan.repetitions; ++rep) {
      runner.run_one(base, base.scene, true, rep);
      if (runner.over_budget()) return std::move(runner.log());
    }
    for (const std::string& op : plan.perturbations) {
      // Variants always derive from the base's own definition so operator
      // effects never compound across the cluster.
      core::PerturbResult derived = runner.env().perturb(base, op, runner.perturb_seed(op, i));
      if (!derived.instance) {
        runner.log().skips.push_back({base.id, op, derived.reason});
        continue;
      }
      const TestInstance variant = *std::move(derived.instance);
      for (int rep = 0; rep < plan.repetitions; ++rep) {
        runner.run_one(variant, variant.scene, true, rep);
        if (runner.over_budget()) return std::move(runner.log());
      }
    }
  }
  return std::move(runner.log());
}

RunLog run_plan(const EvaluationSet& set, const PolicyConfig& policy, const StrategyPlan& plan,
                std::uint64_t seed) {
  switch (plan.kind) {
    case StrategyKind::Standard:
      return run_standard(set, policy, plan, seed);
    case StrategyKind::LimitedIntervention:
      return run_limited_intervention(set, policy, plan, seed);
    case StrategyKind::ContrastSet:
      return run_contrast(set, policy, plan, seed);
  }
  throw std::invalid_argument("unknown strategy kind");
}

double estimate_metric(const RunLog& log) {
  if (log.trials.empty()) return 0.0;
  double sum = 0.0;
  for (const TrialRecord& trial : log.trials) sum += trial.metric;
  return sum / static_cast<double>(log.trials.size());
}

int trials_within_budget(const RunLog& log, double budget) {
  int count = 0;
  for (const double cost : log.cumulative_cost) {
    if (cost > budget) break;
    ++count;
  }
  return count;
}

}  // namespace csev::strategies
