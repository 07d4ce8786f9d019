#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "csev/cli/commands.hpp"
#include "csev/cli/config.hpp"
#include "csev/core/environment.hpp"

using namespace csev;
namespace fs = std::filesystem;

namespace {

cli::ExperimentConfig small_config(const std::string& output_dir) {
  cli::ExperimentConfig cfg;
  cfg.name = "unit";
  cfg.env = core::EnvKind::Tabletop;
  cfg.n = 10;
  cfg.seeds = {1, 2};
  cfg.policy_preset = "noisy20";
  cfg.output_dir = output_dir;

  core::StrategyPlan standard;
  standard.kind = core::StrategyKind::Standard;
  standard.name = "standard";

  core::StrategyPlan contrast;
  contrast.kind = core::StrategyKind::ContrastSet;
  contrast.name = "contrast";
  contrast.perturbations = core::make_environment(cfg.env)->perturbation_ops();
  contrast.budget = 40.0;

  cfg.plans = {standard, contrast};
  return cfg;
}

// Fresh scratch directory per test case, removed on destruction.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& label) {
    path = fs::temp_directory_path() / ("csev-cli-" + label);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  [[nodiscard]] std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

std::map<std::string, std::string> tree_bytes(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) {
      files[fs::relative(entry.path(), root).generic_string()] = slurp(entry.path());
    }
  }
  return files;
}

int run_pipeline(const cli::ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  if (const int rc = cli::cmd_gen(cfg, out, err); rc != cli::kExitOk) return rc;
  if (const int rc = cli::cmd_run(cfg, out, err); rc != cli::kExitOk) return rc;
  return cli::cmd_report(cfg, out, err);
}

}  // namespace

TEST_CASE("config serialization is lossless and dump-stable") {
  cli::ExperimentConfig cfg = small_config("runs");
  cfg.knob_overrides = {{"p_fail", 0.25}};
  const std::string text = cli::dump_config(cfg);
  const cli::ExperimentConfig loaded = cli::load_config(text);
  CHECK(cli::dump_config(loaded) == text);
  CHECK(loaded.name == cfg.name);
  CHECK(loaded.env == cfg.env);
  CHECK(loaded.n == cfg.n);
  CHECK(loaded.seeds == cfg.seeds);
  CHECK(loaded.policy_preset == cfg.policy_preset);
  CHECK(loaded.knob_overrides == cfg.knob_overrides);
  CHECK(loaded.cost_model == cfg.cost_model);
  REQUIRE(loaded.plans.size() == cfg.plans.size());
  CHECK(loaded.plans[1].perturbations == cfg.plans[1].perturbations);
  CHECK(loaded.plans[1].budget == cfg.plans[1].budget);
  CHECK(loaded.output_dir == cfg.output_dir);
  CHECK(loaded.policy().knobs.p_fail == 0.25);
}

TEST_CASE("config validation rejects each malformed field") {
  const auto rejects = [](auto mutate) {
    cli::ExperimentConfig cfg = small_config("runs");
    mutate(cfg);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  };
  rejects([](auto& c) { c.name = ""; });
  rejects([](auto& c) { c.name = "Has Spaces"; });
  rejects([](auto& c) { c.n = 0; });
  rejects([](auto& c) { c.seeds = {}; });
  rejects([](auto& c) { c.seeds = {3, 3}; });
  rejects([](auto& c) { c.plans[1].name = "standard"; });
  rejects([](auto& c) { c.plans[0].cost_model = core::CostModel::TimeProxy; });
  rejects([](auto& c) { c.policy_preset = "no-such-preset"; });
  rejects([](auto& c) { c.knob_overrides = {{"no_such_knob", 0.5}}; });
  rejects([](auto& c) { c.knob_overrides = {{"p_fail", 2.0}}; });
  rejects([](auto& c) { c.plans.clear(); });
  CHECK_NOTHROW(small_config("runs").validate());
}

TEST_CASE("config hash is stable, sensitive, and names the run directory") {
  const cli::ExperimentConfig cfg = small_config("runs");
  const std::string hash = cli::config_hash(cfg);
  CHECK(hash.size() == 16);
  CHECK(hash == cli::config_hash(cfg));

  cli::ExperimentConfig changed = cfg;
  changed.n = 11;
  CHECK(cli::config_hash(changed) != hash);

  CHECK(cli::run_dir(cfg) == "runs/unit-" + hash.substr(0, 8));
}

TEST_CASE("gen, run, and report produce the expected artifacts in order") {
  TempDir tmp("pipeline");
  const cli::ExperimentConfig cfg = small_config(tmp.str());
  std::ostringstream out, err;

  // Running before generating is a usage error, not a crash.
  CHECK(cli::cmd_run(cfg, out, err) == cli::kExitUsage);
  CHECK(err.str().find("gen") != std::string::npos);

  REQUIRE(cli::cmd_gen(cfg, out, err) == cli::kExitOk);
  const fs::path dir = cli::run_dir(cfg);
  CHECK(fs::exists(dir / "config.json"));
  CHECK(fs::exists(dir / "sets/set-seed1.json"));
  CHECK(fs::exists(dir / "sets/set-seed2.json"));
  CHECK(cli::load_config(slurp(dir / "config.json")).name == "unit");

  REQUIRE(cli::cmd_run(cfg, out, err) == cli::kExitOk);
  CHECK(fs::exists(dir / "logs/standard-seed1.jsonl"));
  CHECK(fs::exists(dir / "logs/contrast-seed2.jsonl"));
  CHECK(fs::exists(dir / "manifest.json"));
  CHECK(slurp(dir / "manifest.json").find(cli::config_hash(cfg)) != std::string::npos);

  REQUIRE(cli::cmd_report(cfg, out, err) == cli::kExitOk);
  for (const char* name : {"curve-standard.csv", "curve-contrast.csv",
                           "trials-standard-seed1.csv", "breakdown-contrast-seed2.csv",
                           "pcd.csv"}) {
    CHECK(fs::exists(dir / "report" / name));
  }
}

TEST_CASE("report rejects stale or foreign artifacts") {
  TempDir tmp("report-guards");
  const cli::ExperimentConfig cfg = small_config(tmp.str());
  std::ostringstream out;

  SUBCASE("missing manifest") {
    std::ostringstream err;
    CHECK(cli::cmd_report(cfg, out, err) == cli::kExitUsage);
    CHECK(err.str().find("manifest") != std::string::npos);
  }

  SUBCASE("tampered config hash") {
    std::ostringstream err;
    REQUIRE(run_pipeline(cfg, out, err) == cli::kExitOk);
    const fs::path manifest = fs::path(cli::run_dir(cfg)) / "manifest.json";
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(slurp(manifest));
    j["config_hash"] = "0000000000000000";
    spit(manifest, j.dump(2) + "\n");
    CHECK(cli::cmd_report(cfg, out, err) == cli::kExitUsage);
    CHECK(err.str().find("hash") != std::string::npos);
  }

  SUBCASE("mixed environment kinds") {
    std::ostringstream err;
    REQUIRE(run_pipeline(cfg, out, err) == cli::kExitOk);
    const fs::path log = fs::path(cli::run_dir(cfg)) / "logs/standard-seed1.jsonl";
    std::string text = slurp(log);
    const std::string needle = "\"env\":\"tabletop\"";
    const std::size_t at = text.find(needle);
    REQUIRE(at != std::string::npos);
    text.replace(at, needle.size(), "\"env\":\"nav\"");
    spit(log, text);
    CHECK(cli::cmd_report(cfg, out, err) == cli::kExitUsage);
    CHECK(err.str().find("environment") != std::string::npos);
  }

  SUBCASE("no standard strategy to anchor the error reference") {
    std::ostringstream err;
    cli::ExperimentConfig contrast_only = cfg;
    contrast_only.name = "contrast-only";
    contrast_only.plans = {cfg.plans[1]};
    REQUIRE(cli::cmd_gen(contrast_only, out, err) == cli::kExitOk);
    REQUIRE(cli::cmd_run(contrast_only, out, err) == cli::kExitOk);
    CHECK(cli::cmd_report(contrast_only, out, err) == cli::kExitUsage);
    CHECK(err.str().find("standard") != std::string::npos);
  }
}

TEST_CASE("the whole pipeline is byte-identical across invocations") {
  TempDir tmp("bytes");
  const cli::ExperimentConfig cfg = small_config(tmp.str());
  std::ostringstream out_a, out_b, err;

  REQUIRE(run_pipeline(cfg, out_a, err) == cli::kExitOk);
  const auto files_a = tree_bytes(tmp.path);
  fs::remove_all(cli::run_dir(cfg));

  REQUIRE(run_pipeline(cfg, out_b, err) == cli::kExitOk);
  const auto files_b = tree_bytes(tmp.path);

  REQUIRE_FALSE(files_a.empty());
  REQUIRE(files_a.size() == files_b.size());
  for (const auto& [rel, bytes] : files_a) {
    REQUIRE(files_b.count(rel) == 1);
    CHECK_MESSAGE(files_b.at(rel) == bytes, "file differs: ", rel);
  }
  CHECK(out_a.str() == out_b.str());
}

TEST_CASE("the bundled demo configuration is valid and self-describing") {
  const cli::ExperimentConfig cfg = cli::demo_config("runs");
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.name == "demo");
  CHECK(cfg.n == 250);
  CHECK(cfg.seeds.size() == 3);
  CHECK(cfg.plans.size() == 3);
  CHECK(cli::dump_config(cli::load_config(cli::dump_config(cfg))) == cli::dump_config(cfg));
}
