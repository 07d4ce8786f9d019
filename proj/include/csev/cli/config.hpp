#pragma once

#include <map>
#include <string>
#include <vector>

#include "csev/core/cost.hpp"
#include "csev/core/policy_config.hpp"
#include "csev/core/trial.hpp"
#include "csev/core/types.hpp"

#include <json.hpp>

namespace csev::cli {

// One declarative experiment description. Every scientific parameter lives
// here; command-line flags only select paths and verbosity, so any reported
// number traces back to one hashed config file.
struct ExperimentConfig {
  std::string name;
  core::EnvKind env = core::EnvKind::Tabletop;
  int n = 0;  // instances per evaluation set
  std::vector<std::uint64_t> seeds;
  std::string policy_preset = "oracle";
  std::map<std::string, double> knob_overrides;  // applied on top of the preset
  core::CostModel cost_model = core::CostModel::DistanceMoved;
  std::vector<core::StrategyPlan> plans;
  std::string output_dir = "runs";

  // Throws std::invalid_argument on: empty or non-slug name or plan names,
  // n < 1, empty or duplicate seeds, duplicate plan names, an invalid plan, a
  // plan cost model differing from the config cost model, or a policy that
  // does not resolve.
  void validate() const;

  // Preset resolved and overrides applied, validated.
  [[nodiscard]] core::PolicyConfig policy() const;
};

nlohmann::ordered_json to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const nlohmann::ordered_json& j);

// Canonical text form; load(dump(cfg)) is lossless and dump(load(text)) is a
// fixed point, which is what the config hash is computed over.
std::string dump_config(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& text);
ExperimentConfig read_config_file(const std::string& path);

// FNV-1a over the canonical dump, 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

// All artifacts of one config live under output_dir/<name>-<hash prefix>, so
// a config edit can never silently mix with stale outputs.
std::string run_dir(const ExperimentConfig& cfg);

}  // namespace csev::cli
