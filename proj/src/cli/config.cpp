#include "csev/cli/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "csev/core/rng.hpp"

namespace csev::cli {

using nlohmann::ordered_json;

namespace {

bool is_slug(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

void set_knob(core::DefectKnobs& knobs, const std::string& key, double value) {
  if (key == "p_fail") {
    knobs.p_fail = value;
  } else if (key == "p_direction_invert") {
    knobs.p_direction_invert = value;
  } else if (key == "p_referent_swap") {
    knobs.p_referent_swap = value;
  } else if (key == "p_paraphrase_fail") {
    knobs.p_paraphrase_fail = value;
  } else if (key == "distractor_penalty") {
    knobs.distractor_penalty = value;
  } else {
    throw std::invalid_argument("unknown policy knob: " + key);
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!is_slug(name)) {
    throw std::invalid_argument("config name must be a nonempty [a-z0-9_-] slug");
  }
  if (n < 1) throw std::invalid_argument("evaluation-set size must be >= 1");
  if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size()) {
    throw std::invalid_argument("duplicate seeds");
  }
  if (plans.empty()) throw std::invalid_argument("at least one strategy plan is required");
  std::set<std::string> plan_names;
  for (const core::StrategyPlan& plan : plans) {
    if (!is_slug(plan.name)) {
      throw std::invalid_argument("strategy name must be a nonempty [a-z0-9_-] slug");
    }
    if (!plan_names.insert(plan.name).second) {
      throw std::invalid_argument("duplicate strategy name: " + plan.name);
    }
    plan.validate();
    if (plan.cost_model != cost_model) {
      throw std::invalid_argument("strategy cost model differs from config cost model");
    }
  }
  if (output_dir.empty()) throw std::invalid_argument("output dir must be nonempty");
  (void)policy();
}

core::PolicyConfig ExperimentConfig::policy() const {
  core::PolicyConfig cfg = core::policy_preset(policy_preset);
  for (const auto& [key, value] : knob_overrides) set_knob(cfg.knobs, key, value);
  cfg.validate();
  return cfg;
}

ordered_json to_json(const ExperimentConfig& cfg) {
  ordered_json overrides = ordered_json::object();
  for (const auto& [key, value] : cfg.knob_overrides) overrides[key] = value;

  ordered_json strategies = ordered_json::array();
  for (const core::StrategyPlan& plan : cfg.plans) {
    ordered_json p{{"kind", core::to_string(plan.kind)}, {"name", plan.name}};
    if (plan.kind == core::StrategyKind::ContrastSet) {
      p["perturbations"] = plan.perturbations;
      p["budget"] = plan.budget;
    }
    p["repetitions"] = plan.repetitions;
    strategies.push_back(std::move(p));
  }

  return ordered_json{{"name", cfg.name},
                      {"environment", core::to_string(cfg.env)},
                      {"n", cfg.n},
                      {"seeds", cfg.seeds},
                      {"policy", ordered_json{{"preset", cfg.policy_preset},
                                              {"overrides", std::move(overrides)}}},
                      {"cost_model", core::to_string(cfg.cost_model)},
                      {"strategies", std::move(strategies)},
                      {"output_dir", cfg.output_dir}};
}

ExperimentConfig config_from_json(const ordered_json& j) {
  ExperimentConfig cfg;
  cfg.name = j.at("name").get<std::string>();
  cfg.env = core::env_kind_from_string(j.at("environment").get<std::string>());
  cfg.n = j.at("n").get<int>();
  cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  const ordered_json& policy = j.at("policy");
  cfg.policy_preset = policy.at("preset").get<std::string>();
  for (const auto& [key, value] : policy.at("overrides").items()) {
    cfg.knob_overrides[key] = value.get<double>();
  }
  cfg.cost_model = core::cost_model_from_string(j.at("cost_model").get<std::string>());
  for (const ordered_json& p : j.at("strategies")) {
    core::StrategyPlan plan;
    plan.kind = core::strategy_kind_from_string(p.at("kind").get<std::string>());
    plan.name = p.at("name").get<std::string>();
    if (p.contains("perturbations")) {
      plan.perturbations = p.at("perturbations").get<std::vector<std::string>>();
    }
    if (p.contains("budget")) plan.budget = p.at("budget").get<double>();
    plan.repetitions = p.at("repetitions").get<int>();
    plan.cost_model = cfg.cost_model;
    cfg.plans.push_back(std::move(plan));
  }
  cfg.output_dir = j.at("output_dir").get<std::string>();
  cfg.validate();
  return cfg;
}

std::string dump_config(const ExperimentConfig& cfg) { return to_json(cfg).dump(2) + "\n"; }

ExperimentConfig load_config(const std::string& text) {
  return config_from_json(ordered_json::parse(text));
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config(buf.str());
}

std::string config_hash(const ExperimentConfig& cfg) {
  const std::uint64_t h = core::Rng::fnv1a(dump_config(cfg));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string run_dir(const ExperimentConfig& cfg) {
  return cfg.output_dir + "/" + cfg.name + "-" + config_hash(cfg).substr(0, 8);
}

}  // namespace csev::cli
