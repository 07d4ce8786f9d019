#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "csev/core/cost.hpp"
#include "csev/core/environment.hpp"
#include "csev/core/json_io.hpp"
#include "csev/core/rng.hpp"
#include "csev/core/trial.hpp"
#include "csev/tabletop/board.hpp"

using namespace csev;

namespace {

tabletop::Board make_board(std::initializer_list<tabletop::Block> blocks) {
  tabletop::Board board;
  board.blocks = blocks;
  board.sort_blocks();
  return board;
}

}  // namespace

TEST_CASE("rng: identical seeds produce identical streams") {
  core::Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("rng: forks key off the construction seed, not consumed state") {
  core::Rng fresh(7);
  core::Rng drained(7);
  for (int i = 0; i < 50; ++i) drained.next_u64();
  CHECK(fresh.fork("site").next_u64() == drained.fork("site").next_u64());
  CHECK(fresh.fork("site", 3).next_u64() == drained.fork("site", 3).next_u64());
}

TEST_CASE("rng: distinct fork tags and indices give distinct streams") {
  core::Rng rng(7);
  CHECK(rng.fork("a").next_u64() != rng.fork("b").next_u64());
  CHECK(rng.fork("a", 0).next_u64() != rng.fork("a", 1).next_u64());
}

TEST_CASE("rng: uniform stays in [0, 1) and bernoulli respects edge cases") {
  core::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  core::Rng p0(4), p1(4);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(p0.bernoulli(0.0));
    CHECK(p1.bernoulli(1.0));
  }
}

TEST_CASE("scene_diff: identical scenes cost zero regardless of instructions") {
  const auto a = make_board({{"red-cube", "red", "cube", {0.1, 0.1}},
                             {"blue-star", "blue", "star", {0.4, 0.3}}});
  const auto b = make_board({{"red-cube", "red", "cube", {0.1, 0.1}},
                             {"blue-star", "blue", "star", {0.4, 0.3}}});
  const core::SceneDiff diff = core::scene_diff(a, b);
  CHECK(diff.distance_m == 0.0);
  CHECK(diff.objects_touched() == 0);
}

TEST_CASE("scene_diff: symmetry and triangle inequality on matched scenes") {
  const auto a = make_board({{"red-cube", "red", "cube", {0.10, 0.10}},
                             {"blue-star", "blue", "star", {0.40, 0.30}}});
  const auto b = make_board({{"red-cube", "red", "cube", {0.25, 0.15}},
                             {"blue-star", "blue", "star", {0.35, 0.05}}});
  const auto c = make_board({{"red-cube", "red", "cube", {0.55, 0.35}},
                             {"blue-star", "blue", "star", {0.05, 0.35}}});
  CHECK(core::scene_diff_cost(a, b) == doctest::Approx(core::scene_diff_cost(b, a)).epsilon(1e-12));
  CHECK(core::scene_diff_cost(a, c) <=
        core::scene_diff_cost(a, b) + core::scene_diff_cost(b, c) + 1e-12);
}

TEST_CASE("scene_diff: unmatched objects are staged at the fixed distance") {
  const auto empty = make_board({});
  const auto two = make_board({{"red-cube", "red", "cube", {0.1, 0.1}},
                               {"blue-star", "blue", "star", {0.4, 0.3}}});
  const core::SceneDiff diff = core::scene_diff(empty, two);
  CHECK(diff.objects_added == 2);
  CHECK(diff.objects_removed == 0);
  CHECK(diff.distance_m == 2.0 * core::staging_distance(core::EnvKind::Tabletop));
  const core::SceneDiff back = core::scene_diff(two, empty);
  CHECK(back.objects_removed == 2);
  CHECK(back.distance_m == diff.distance_m);
}

TEST_CASE("scene_diff: mismatched environment kinds are rejected") {
  const auto board = make_board({});
  const auto nav_scene = core::make_environment(core::EnvKind::Nav)->staging_scene();
  CHECK_THROWS_AS((void)core::scene_diff(board, *nav_scene), std::invalid_argument);
}

TEST_CASE("displaced_object_count: counts matched objects beyond the tolerance") {
  const auto nominal = make_board({{"red-cube", "red", "cube", {0.10, 0.10}},
                                   {"blue-star", "blue", "star", {0.40, 0.30}}});
  const auto drifted = make_board({{"red-cube", "red", "cube", {0.10, 0.10}},
                                   {"blue-star", "blue", "star", {0.40, 0.20}}});
  CHECK(core::displaced_object_count(drifted, nominal, 0.05) == 1);
  CHECK(core::displaced_object_count(drifted, nominal, 0.15) == 0);
  CHECK(core::displaced_object_count(nominal, nominal, 0.05) == 0);
}

TEST_CASE("time proxy cost is affine in distance and objects") {
  CHECK(core::time_proxy_cost(0.0, 0) == 0.0);
  CHECK(core::time_proxy_cost(2.0, 3) == 2.0 * 10.0 + 3.0 * 5.0);
}

TEST_CASE("cost ledger accumulates charges and flags budget overshoot") {
  core::CostLedger ledger(core::CostModel::DistanceMoved, 1.0);
  core::SceneDiff diff;
  diff.distance_m = 0.6;
  ledger.charge(diff);
  CHECK_FALSE(ledger.exceeded());
  ledger.charge(diff);
  CHECK(ledger.total() == 0.6 + 0.6);
  CHECK(ledger.exceeded());
}

TEST_CASE("perturbation tags round-trip through strings") {
  for (const char* name : {"original", "dL", "dLB", "dLB1", "dLB2", "dS", "dSB", "dSB1", "dSB2"}) {
    CHECK(core::to_string(core::tag_from_string(name)) == name);
  }
  CHECK(core::tag_from_string("dLB2").kind == core::TagKind::DLB);
  CHECK(core::tag_from_string("dLB2").variant == 2);
}

TEST_CASE("strategy plan validation rejects kind and parameter mismatches") {
  core::StrategyPlan plan;
  plan.name = "p";
  plan.repetitions = 0;
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
  plan.repetitions = 1;
  plan.budget = 5.0;
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
  plan.budget = 0.0;
  plan.perturbations = {"op"};
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);

  plan.kind = core::StrategyKind::ContrastSet;
  plan.budget = 0.0;
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
  plan.budget = 10.0;
  CHECK_NOTHROW(plan.validate());
  plan.perturbations.clear();
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
}

TEST_CASE("evaluation sets are deterministic and serialize byte-identically") {
  for (const core::EnvKind kind : {core::EnvKind::Tabletop, core::EnvKind::Nav}) {
    const auto env = core::make_environment(kind);
    const core::EvaluationSet first = env->sample_evaluation_set(10, 99);
    const core::EvaluationSet second = env->sample_evaluation_set(10, 99);
    const std::string a = core::dump_evaluation_set(first);
    const std::string b = core::dump_evaluation_set(second);
    CHECK(a == b);

    const core::EvaluationSet loaded = core::load_evaluation_set(a, *env);
    CHECK(core::dump_evaluation_set(loaded) == a);
    CHECK(loaded.instances.size() == first.instances.size());
    CHECK(loaded.seed == first.seed);
  }
}

TEST_CASE("every generated instance passes its environment's feasibility check") {
  for (const core::EnvKind kind : {core::EnvKind::Tabletop, core::EnvKind::Nav}) {
    const auto env = core::make_environment(kind);
    const core::EvaluationSet set = env->sample_evaluation_set(15, 5);
    for (const core::TestInstance& instance : set.instances) {
      const core::Feasibility feasibility =
          env->check_feasible(instance.instruction, *instance.scene);
      CHECK_MESSAGE(feasibility.ok, instance.id, ": ", feasibility.reason);
    }
  }
}

TEST_CASE("run logs round-trip through JSONL") {
  core::RunLog log;
  log.env = core::EnvKind::Tabletop;
  log.plan.kind = core::StrategyKind::ContrastSet;
  log.plan.name = "contrast";
  log.plan.perturbations = {"swap_referents", "move_target"};
  log.plan.budget = 42.5;
  log.master_seed = 77;

  core::TrialRecord t;
  t.instance_id = "tabletop-1-003";
  t.tag = core::tag_from_string("dSB1");
  t.metric = 0.75;
  t.reset_cost = 1.25;
  t.reset_distance_m = 1.25;
  t.objects_touched = 2;
  t.path_length = 0.4;
  t.success = true;
  t.repetition = 1;
  t.seed = 123456789;
  log.push(t);
  t.instance_id = "tabletop-1-004";
  t.metric = 0.0;
  t.success = false;
  t.timeout = true;
  t.reset_cost = 0.0;
  log.push(t);
  log.skips.push_back({"tabletop-1-005", "invert_direction", "no direction word"});

  std::ostringstream out;
  core::write_run_log(out, log);
  std::istringstream in(out.str());
  const core::RunLog loaded = core::read_run_log(in);

  REQUIRE(loaded.trials.size() == log.trials.size());
  CHECK(loaded.env == log.env);
  CHECK(loaded.master_seed == log.master_seed);
  CHECK(loaded.plan.name == log.plan.name);
  CHECK(loaded.plan.budget == log.plan.budget);
  CHECK(loaded.plan.perturbations == log.plan.perturbations);
  for (std::size_t i = 0; i < log.trials.size(); ++i) {
    CHECK(loaded.trials[i].instance_id == log.trials[i].instance_id);
    CHECK(loaded.trials[i].tag == log.trials[i].tag);
    CHECK(loaded.trials[i].metric == log.trials[i].metric);
    CHECK(loaded.trials[i].reset_cost == log.trials[i].reset_cost);
    CHECK(loaded.trials[i].success == log.trials[i].success);
    CHECK(loaded.trials[i].timeout == log.trials[i].timeout);
    CHECK(loaded.trials[i].seed == log.trials[i].seed);
    CHECK(loaded.cumulative_cost[i] == log.cumulative_cost[i]);
  }
  REQUIRE(loaded.skips.size() == 1);
  CHECK(loaded.skips[0].op == "invert_direction");

  // A second serialization of the loaded log reproduces the bytes.
  std::ostringstream again;
  core::write_run_log(again, loaded);
  CHECK(again.str() == out.str());
}
