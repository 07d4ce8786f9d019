#include "csev/cli/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csev/core/environment.hpp"
#include "csev/core/json_io.hpp"
#include "csev/stats/stats.hpp"
#include "csev/strategies/runner.hpp"

namespace csev::cli {

using nlohmann::ordered_json;

namespace {

std::string fmt3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string set_file(std::uint64_t seed) {
  return "sets/set-seed" + std::to_string(seed) + ".json";
}

std::string log_file(const std::string& plan, std::uint64_t seed) {
  return "logs/" + plan + "-seed" + std::to_string(seed) + ".jsonl";
}

// Maps exception classes onto the shared exit codes: bad inputs and IO are
// usage errors, anything else escaping a command is a broken invariant.
template <typename Fn>
int guard(const char* cmd, std::ostream& err, Fn&& fn) {
  try {
    return std::forward<Fn>(fn)();
  } catch (const std::invalid_argument& e) {
    err << cmd << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << cmd << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << cmd << ": internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace

int cmd_gen(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guard("gen", err, [&] {
    cfg.validate();
    const std::string dir = run_dir(cfg);
    std::filesystem::create_directories(dir + "/sets");
    write_text_file(dir + "/config.json", dump_config(cfg));

    const auto env = core::make_environment(cfg.env);
    for (std::uint64_t seed : cfg.seeds) {
      const core::EvaluationSet set = env->sample_evaluation_set(cfg.n, seed);
      write_text_file(dir + "/" + set_file(seed), core::dump_evaluation_set(set));

      std::map<std::string, int> categories;
      int feasible = 0;
      for (const core::TestInstance& instance : set.instances) {
        categories[instance.instruction.frame.category] += 1;
        if (env->check_feasible(instance.instruction, *instance.scene).ok) feasible += 1;
      }
      out << "seed " << seed << ": " << set.instances.size() << " instances, feasible "
          << feasible << "/" << set.instances.size();
      for (const auto& [category, count] : categories) {
        out << ", " << category << "=" << count;
      }
      out << "\n";
    }
    out << "sets written under " << dir << "\n";
    return kExitOk;
  });
}

int cmd_run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guard("run", err, [&] {
    cfg.validate();
    const std::string dir = run_dir(cfg);
    const auto env = core::make_environment(cfg.env);

    std::vector<core::EvaluationSet> sets;
    for (std::uint64_t seed : cfg.seeds) {
      const std::string path = dir + "/" + set_file(seed);
      if (!std::filesystem::exists(path)) {
        err << "run: missing evaluation set " << path << " (run gen first)\n";
        return kExitUsage;
      }
      sets.push_back(core::load_evaluation_set(read_text_file(path), *env));
    }

    std::filesystem::create_directories(dir + "/logs");
    const core::PolicyConfig policy = cfg.policy();
    ordered_json log_entries = ordered_json::array();
    for (const core::StrategyPlan& plan : cfg.plans) {
      for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
        const std::uint64_t seed = cfg.seeds[i];
        const core::RunLog log = strategies::run_plan(sets[i], policy, plan, seed);
        const std::string rel = log_file(plan.name, seed);
        std::ostringstream text;
        core::write_run_log(text, log);
        write_text_file(dir + "/" + rel, text.str());
        log_entries.push_back(ordered_json{
            {"strategy", plan.name}, {"seed", seed}, {"file", rel}});
        out << plan.name << " seed " << seed << ": " << log.trials.size()
            << " trials, total cost " << fmt3(log.total_cost()) << ", estimate "
            << fmt3(strategies::estimate_metric(log)) << "\n";
      }
    }

    ordered_json sets_json = ordered_json::array();
    for (std::uint64_t seed : cfg.seeds) sets_json.push_back(set_file(seed));
    const ordered_json manifest{{"config_hash", config_hash(cfg)},
                                {"name", cfg.name},
                                {"environment", core::to_string(cfg.env)},
                                {"n", cfg.n},
                                {"seeds", cfg.seeds},
                                {"sets", std::move(sets_json)},
                                {"logs", std::move(log_entries)}};
    write_text_file(dir + "/manifest.json", manifest.dump(2) + "\n");
    out << "logs and manifest written under " << dir << "\n";
    return kExitOk;
  });
}

int cmd_report(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  return guard("report", err, [&] {
    cfg.validate();
    const std::string dir = run_dir(cfg);
    const std::string manifest_path = dir + "/manifest.json";
    if (!std::filesystem::exists(manifest_path)) {
      err << "report: missing " << manifest_path << " (run the run command first)\n";
      return kExitUsage;
    }
    const ordered_json manifest = ordered_json::parse(read_text_file(manifest_path));
    if (manifest.at("config_hash").get<std::string>() != config_hash(cfg)) {
      err << "report: config hash mismatch; logs were written by a different config\n";
      return kExitUsage;
    }

    std::map<std::pair<std::string, std::uint64_t>, core::RunLog> logs;
    for (const ordered_json& entry : manifest.at("logs")) {
      std::istringstream text(read_text_file(dir + "/" + entry.at("file").get<std::string>()));
      core::RunLog log = core::read_run_log(text);
      if (log.env != cfg.env) {
        err << "report: mixed environment kinds in logs\n";
        return kExitUsage;
      }
      logs.emplace(std::make_pair(entry.at("strategy").get<std::string>(),
                                  entry.at("seed").get<std::uint64_t>()),
                   std::move(log));
    }

    const auto log_of = [&](const std::string& plan, std::uint64_t seed) -> const core::RunLog& {
      const auto it = logs.find({plan, seed});
      if (it == logs.end()) {
        throw std::runtime_error("manifest has no log for " + plan + " seed " +
                                 std::to_string(seed));
      }
      return it->second;
    };

    // Per-seed reference: the sample mean of the standard evaluation of that
    // seed's set.
    const core::StrategyPlan* standard = nullptr;
    for (const core::StrategyPlan& plan : cfg.plans) {
      if (plan.kind == core::StrategyKind::Standard) {
        standard = &plan;
        break;
      }
    }
    if (standard == nullptr) {
      err << "report: config has no standard strategy to define the error reference\n";
      return kExitUsage;
    }
    std::vector<double> references;
    for (std::uint64_t seed : cfg.seeds) {
      references.push_back(strategies::estimate_metric(log_of(standard->name, seed)));
    }

    std::filesystem::create_directories(dir + "/report");
    std::ostringstream pcd;
    pcd << "strategy,tag,pcd_points\n";
    for (const core::StrategyPlan& plan : cfg.plans) {
      std::vector<core::RunLog> plan_logs;
      for (std::uint64_t seed : cfg.seeds) plan_logs.push_back(log_of(plan.name, seed));

      std::ostringstream curve_csv;
      stats::write_curve_csv(curve_csv, stats::cost_error_curve(plan_logs, references));
      write_text_file(dir + "/report/curve-" + plan.name + ".csv", curve_csv.str());
      out << "report/curve-" << plan.name << ".csv\n";

      // Pooled per-tag means across seeds feed the completion-difference rows.
      std::map<std::string, std::pair<int, double>> pooled;
      for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
        const std::uint64_t seed = cfg.seeds[i];
        std::ostringstream trials_csv;
        stats::write_trials_csv(trials_csv, stats::trials_per_cost(plan_logs[i]));
        const std::string seed_str = std::to_string(seed);
        write_text_file(dir + "/report/trials-" + plan.name + "-seed" + seed_str + ".csv",
                        trials_csv.str());
        out << "report/trials-" << plan.name << "-seed" << seed_str << ".csv\n";

        const stats::BreakdownTable table = stats::metric_breakdown(plan_logs[i]);
        std::ostringstream breakdown_csv;
        stats::write_breakdown_csv(breakdown_csv, table);
        write_text_file(dir + "/report/breakdown-" + plan.name + "-seed" + seed_str + ".csv",
                        breakdown_csv.str());
        out << "report/breakdown-" << plan.name << "-seed" << seed_str << ".csv\n";

        for (const stats::BreakdownRow& row : table.rows) {
          auto& [count, sum] = pooled[row.tag];
          count += row.count;
          sum += row.mean_metric * row.count;
        }
      }

      const auto original = pooled.find("original");
      if (original != pooled.end()) {
        for (const auto& [tag, acc] : pooled) {
          if (tag == "original") continue;
          const double tag_mean = acc.second / acc.first;
          const double original_mean = original->second.second / original->second.first;
          pcd << plan.name << ',' << tag << ','
              << fmt6(stats::percent_completion_difference(tag_mean, original_mean)) << "\n";
        }
      }
    }
    write_text_file(dir + "/report/pcd.csv", pcd.str());
    out << "report/pcd.csv\n";
    out << "report written under " << dir << "/report\n";
    return kExitOk;
  });
}

ExperimentConfig demo_config(const std::string& output_dir) {
  ExperimentConfig cfg;
  cfg.name = "demo";
  cfg.env = core::EnvKind::Tabletop;
  cfg.n = 250;
  cfg.seeds = {1, 5, 12};
  cfg.policy_preset = "noisy20";
  cfg.cost_model = core::CostModel::DistanceMoved;

  core::StrategyPlan standard;
  standard.kind = core::StrategyKind::Standard;
  standard.name = "standard";

  core::StrategyPlan limited;
  limited.kind = core::StrategyKind::LimitedIntervention;
  limited.name = "limited";

  core::StrategyPlan contrast;
  contrast.kind = core::StrategyKind::ContrastSet;
  contrast.name = "contrast";
  contrast.perturbations = core::make_environment(cfg.env)->perturbation_ops();
  contrast.budget = 300.0;

  cfg.plans = {standard, limited, contrast};
  cfg.output_dir = output_dir;
  cfg.validate();
  return cfg;
}

int cmd_demo(const std::string& output_dir, std::ostream& out, std::ostream& err) {
  return guard("demo", err, [&] {
    const ExperimentConfig cfg = demo_config(output_dir);
    out << "demo config " << config_hash(cfg) << " under " << run_dir(cfg) << "\n";
    if (const int rc = cmd_gen(cfg, out, err); rc != kExitOk) return rc;
    if (const int rc = cmd_run(cfg, out, err); rc != kExitOk) return rc;
    return cmd_report(cfg, out, err);
  });
}

}  // namespace csev::cli
