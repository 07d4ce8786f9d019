#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "csev/core/cost.hpp"
#include "csev/core/types.hpp"

namespace csev::core {

enum class StrategyKind { Standard, LimitedIntervention, ContrastSet };

std::string to_string(StrategyKind kind);
StrategyKind strategy_kind_from_string(const std::string& s);

struct StrategyPlan {
  StrategyKind kind = StrategyKind::Standard;
  std::string name;
  std::vector<std::string> perturbations;  // operator ids, contrast-set only
  double budget = 0.0;                     // ledger units; contrast-set only
  int repetitions = 1;
  CostModel cost_model = CostModel::DistanceMoved;

  // Throws std::invalid_argument on kind/parameter mismatches (contrast needs
  // non-empty perturbations and budget > 0; the others reject both).
  void validate() const;
};

struct TrialRecord {
  std::string instance_id;
  PerturbationTag tag;
  double metric = 0.0;       // in [0, 1]
  double reset_cost = 0.0;   // ledger units charged before this trial
  double reset_distance_m = 0.0;
  int objects_touched = 0;
  double path_length = 0.0;  // meters traveled by the agent
  bool success = false;
  bool timeout = false;
  bool scene_reset = false;  // limited intervention: true only at infeasibility resets
  int repetition = 0;
  std::uint64_t seed = 0;
};

struct SkipRecord {
  std::string instance_id;
  std::string op;
  std::string reason;
};

struct RunLog {
  EnvKind env = EnvKind::Tabletop;
  StrategyPlan plan;
  std::uint64_t master_seed = 0;
  std::vector<TrialRecord> trials;
  std::vector<double> cumulative_cost;  // prefix sums of reset_cost
  std::vector<SkipRecord> skips;

  // In-memory only: per-trial (start, end) scene snapshots for replay checks.
  std::vector<std::pair<ScenePtr, ScenePtr>> scene_trace;

  void push(TrialRecord record) {
    const double prev = cumulative_cost.empty() ? 0.0 : cumulative_cost.back();
    cumulative_cost.push_back(prev + record.reset_cost);
    trials.push_back(std::move(record));
  }

  [[nodiscard]] double total_cost() const {
    return cumulative_cost.empty() ? 0.0 : cumulative_cost.back();
  }
};

// JSONL serialization: one trial per line, fields in a fixed order, followed
// by one terminating summary line carrying skips and totals.
void write_run_log(std::ostream& out, const RunLog& log);
RunLog read_run_log(std::istream& in);

}  // namespace csev::core
