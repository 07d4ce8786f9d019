#include "csev/core/trial.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace csev::core {

using nlohmann::ordered_json;

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Standard: return "standard";
    case StrategyKind::LimitedIntervention: return "limited_intervention";
    case StrategyKind::ContrastSet: return "contrast_set";
  }
  return "standard";
}

StrategyKind strategy_kind_from_string(const std::string& s) {
  if (s == "standard") return StrategyKind::Standard;
  if (s == "limited_intervention") return StrategyKind::LimitedIntervention;
  if (s == "contrast_set") return StrategyKind::ContrastSet;
  throw std::invalid_argument("unknown strategy kind: " + s);
}

void StrategyPlan::validate() const {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (kind == StrategyKind::ContrastSet) {
    if (perturbations.empty()) {
      throw std::invalid_argument("contrast_set requires a non-empty perturbation list");
    }
    if (!(budget > 0.0)) throw std::invalid_argument("contrast_set requires budget > 0");
  } else {
    if (!perturbations.empty()) {
      throw std::invalid_argument(to_string(kind) + " takes no perturbation list");
    }
    if (budget != 0.0) throw std::invalid_argument(to_string(kind) + " takes no budget");
  }
}

namespace {

ordered_json plan_to_json(const StrategyPlan& plan) {
  return ordered_json{{"kind", to_string(plan.kind)},
                      {"name", plan.name},
                      {"perturbations", plan.perturbations},
                      {"budget", plan.budget},
                      {"repetitions", plan.repetitions},
                      {"cost_model", to_string(plan.cost_model)}};
}

StrategyPlan plan_from_json(const ordered_json& j) {
  StrategyPlan plan;
  plan.kind = strategy_kind_from_string(j.at("kind").get<std::string>());
  plan.name = j.at("name").get<std::string>();
  plan.perturbations = j.at("perturbations").get<std::vector<std::string>>();
  plan.budget = j.at("budget").get<double>();
  plan.repetitions = j.at("repetitions").get<int>();
  plan.cost_model = cost_model_from_string(j.at("cost_model").get<std::string>());
  return plan;
}

}  // namespace

void write_run_log(std::ostream& out, const RunLog& log) {
  ordered_json header{{"type", "header"},
                      {"env", to_string(log.env)},
                      {"master_seed", log.master_seed},
                      {"plan", plan_to_json(log.plan)}};
  out << header.dump() << "\n";
  for (std::size_t i = 0; i < log.trials.size(); ++i) {
    const TrialRecord& t = log.trials[i];
    ordered_json line{{"type", "trial"},
                      {"instance_id", t.instance_id},
                      {"tag", to_string(t.tag)},
                      {"metric", t.metric},
                      {"reset_cost", t.reset_cost},
                      {"reset_distance_m", t.reset_distance_m},
                      {"objects_touched", t.objects_touched},
                      {"path_length", t.path_length},
                      {"success", t.success},
                      {"timeout", t.timeout},
                      {"scene_reset", t.scene_reset},
                      {"repetition", t.repetition},
                      {"seed", t.seed},
                      {"cumulative_cost", log.cumulative_cost[i]}};
    out << line.dump() << "\n";
  }
  ordered_json skips = ordered_json::array();
  for (const SkipRecord& s : log.skips) {
    skips.push_back(ordered_json{{"instance_id", s.instance_id}, {"op", s.op}, {"reason", s.reason}});
  }
  ordered_json footer{{"type", "end"}, {"skips", skips}, {"total_cost", log.total_cost()}};
  out << footer.dump() << "\n";
}

RunLog read_run_log(std::istream& in) {
  RunLog log;
  bool have_header = false;
  bool have_footer = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const ordered_json j = ordered_json::parse(line);
    const std::string type = j.at("type").get<std::string>();
    if (type == "header") {
      log.env = env_kind_from_string(j.at("env").get<std::string>());
      log.master_seed = j.at("master_seed").get<std::uint64_t>();
      log.plan = plan_from_json(j.at("plan"));
      have_header = true;
    } else if (type == "trial") {
      TrialRecord t;
      t.instance_id = j.at("instance_id").get<std::string>();
      t.tag = tag_from_string(j.at("tag").get<std::string>());
      t.metric = j.at("metric").get<double>();
      t.reset_cost = j.at("reset_cost").get<double>();
      t.reset_distance_m = j.at("reset_distance_m").get<double>();
      t.objects_touched = j.at("objects_touched").get<int>();
      t.path_length = j.at("path_length").get<double>();
      t.success = j.at("success").get<bool>();
      t.timeout = j.at("timeout").get<bool>();
      t.scene_reset = j.at("scene_reset").get<bool>();
      t.repetition = j.at("repetition").get<int>();
      t.seed = j.at("seed").get<std::uint64_t>();
      log.push(std::move(t));
    } else if (type == "end") {
      for (const auto& s : j.at("skips")) {
        log.skips.push_back({s.at("instance_id").get<std::string>(),
                             s.at("op").get<std::string>(),
                             s.at("reason").get<std::string>()});
      }
      have_footer = true;
    } else {
      throw std::invalid_argument("unknown run log line type: " + type);
    }
  }
  if (!have_header || !have_footer) {
    throw std::invalid_argument("truncated run log: missing header or end line");
  }
  return log;
}

}  // namespace csev::core
