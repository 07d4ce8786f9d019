#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "csev/core/environment.hpp"
#include "csev/core/trial.hpp"
#include "csev/stats/stats.hpp"
#include "csev/strategies/runner.hpp"

using namespace csev;

namespace {

core::RunLog make_log(const std::vector<double>& metrics, const std::vector<double>& costs,
                      const std::vector<std::string>& tags = {}) {
  REQUIRE(metrics.size() == costs.size());
  core::RunLog log;
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    core::TrialRecord t;
    t.instance_id = "t" + std::to_string(i);
    t.metric = metrics[i];
    t.reset_cost = costs[i];
    if (!tags.empty()) t.tag = core::tag_from_string(tags[i]);
    log.push(t);
  }
  return log;
}

core::RunLog sampled_standard_log(std::uint64_t seed, int n = 100) {
  const core::EvaluationSet set = core::sample_evaluation_set(core::EnvKind::Tabletop, n, seed);
  core::StrategyPlan plan;
  plan.kind = core::StrategyKind::Standard;
  plan.name = "standard";
  return strategies::run_standard(set, core::policy_preset("noisy20"), plan, seed);
}

double final_error(const core::RunLog& log, double reference) {
  return std::fabs(strategies::estimate_metric(log) - reference);
}

}  // namespace

TEST_CASE("a single bin reproduces the mean final error exactly") {
  const std::vector<core::RunLog> logs = {sampled_standard_log(3), sampled_standard_log(4)};
  const double reference = 0.8;
  const stats::CostErrorCurve one = stats::cost_error_curve(logs, reference, 1);
  REQUIRE(one.mean_err.size() == 1);
  const double expected = (final_error(logs[0], reference) + final_error(logs[1], reference)) / 2;
  CHECK(one.mean_err[0] == expected);
  CHECK(one.bin_lo[0] == 0.0);
  CHECK(one.bin_hi[0] == std::max(logs[0].total_cost(), logs[1].total_cost()));

  SUBCASE("the last of fifty bins agrees with the single bin") {
    const stats::CostErrorCurve fifty = stats::cost_error_curve(logs, reference, 50);
    REQUIRE(fifty.mean_err.size() == 50);
    CHECK(fifty.mean_err.back() == one.mean_err[0]);
    CHECK(fifty.bin_hi.back() == one.bin_hi[0]);
  }
}

TEST_CASE("curve errors are measured against each log's own reference") {
  const std::vector<core::RunLog> logs = {sampled_standard_log(3), sampled_standard_log(4)};
  const std::vector<double> refs = {strategies::estimate_metric(logs[0]),
                                    strategies::estimate_metric(logs[1])};
  const stats::CostErrorCurve curve = stats::cost_error_curve(logs, refs, 1);
  CHECK(curve.mean_err[0] == 0.0);
  CHECK(curve.std_err[0] == 0.0);

  // The shared-reference overload must agree with a filled per-log vector.
  const stats::CostErrorCurve shared = stats::cost_error_curve(logs, 0.75, 10);
  const stats::CostErrorCurve filled =
      stats::cost_error_curve(logs, std::vector<double>{0.75, 0.75}, 10);
  CHECK(shared.mean_err == filled.mean_err);
  CHECK(shared.std_err == filled.std_err);
}

TEST_CASE("bins before a log's first trial carry the empty-estimate error") {
  // First trial lands at cost 10, so early bins see no estimate yet.
  const core::RunLog log = make_log({1.0}, {10.0});
  const stats::CostErrorCurve curve = stats::cost_error_curve({log}, 0.25, 5);
  REQUIRE(curve.mean_err.size() == 5);
  for (int b = 0; b + 1 < 5; ++b) {
    CHECK(curve.mean_err[b] == 0.25);  // |0 - 0.25|
    CHECK(curve.std_err[b] == 0.0);
  }
  CHECK(curve.mean_err[4] == 0.75);  // |1 - 0.25| once the trial is inside
}

TEST_CASE("every trial lands in some bin including the max-cost trial") {
  const core::RunLog log = make_log({0.0, 1.0, 1.0, 1.0}, {1.0, 1.0, 1.0, 1.0});
  // Running means: 0, 0.5, 2/3, 0.75 at costs 1, 2, 3, 4.
  const stats::CostErrorCurve curve = stats::cost_error_curve({log}, 0.75, 4);
  CHECK(curve.bin_hi.back() == 4.0);
  CHECK(curve.mean_err[0] == 0.75);
  CHECK(curve.mean_err[1] == 0.25);
  CHECK(curve.mean_err[2] == doctest::Approx(0.75 - 2.0 / 3.0).epsilon(1e-12));
  CHECK(curve.mean_err[3] == 0.0);
}

TEST_CASE("curve validation rejects malformed inputs") {
  const core::RunLog good = make_log({1.0}, {1.0});
  CHECK_THROWS_AS((void)stats::cost_error_curve({}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)stats::cost_error_curve({good, core::RunLog{}}, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)stats::cost_error_curve({good}, -0.1), std::invalid_argument);
  CHECK_THROWS_AS((void)stats::cost_error_curve({good}, 1.1), std::invalid_argument);
  CHECK_THROWS_AS((void)stats::cost_error_curve({good}, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)stats::cost_error_curve({good}, std::vector<double>{0.5, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("running estimate of a noisy oracle converges on its success rate") {
  // Binomial consistency: after n trials the sample mean stays within three
  // standard errors of 0.8 for p_fail = 0.2.
  const core::RunLog log = sampled_standard_log(17, 250);
  for (const int n : {50, 100, 250}) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += log.trials[i].metric;
    const double estimate = sum / n;
    const double sigma = std::sqrt(0.2 * 0.8 / n);
    CHECK(std::fabs(estimate - 0.8) <= 3 * sigma);
  }
}

TEST_CASE("trials-per-cost series is monotone and mirrors the log") {
  const core::RunLog log = make_log({1, 1, 1}, {2.0, 0.0, 3.0});
  const stats::TrialsPerCost series = stats::trials_per_cost(log);
  REQUIRE(series.cost.size() == 3);
  CHECK(series.cost == std::vector<double>{2.0, 2.0, 5.0});
  CHECK(series.trials == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS((void)stats::trials_per_cost(core::RunLog{}), std::invalid_argument);
}

TEST_CASE("breakdown rows aggregate back to the direct mean") {
  const core::RunLog log = make_log({1.0, 0.5, 0.0, 1.0, 0.25},
                                    {1, 1, 1, 1, 1},
                                    {"dSB1", "original", "dLB2", "original", "dSB1"});
  const stats::BreakdownTable table = stats::metric_breakdown(log);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].tag == "original");  // canonical order, present tags only
  CHECK(table.rows[1].tag == "dLB2");
  CHECK(table.rows[2].tag == "dSB1");
  CHECK(table.rows[0].count == 2);
  CHECK(table.rows[0].mean_metric == 0.75);
  CHECK(table.rows[2].mean_metric == 0.625);

  int total = 0;
  double weighted = 0.0;
  for (const stats::BreakdownRow& row : table.rows) {
    total += row.count;
    weighted += row.mean_metric * row.count;
  }
  CHECK(total == static_cast<int>(log.trials.size()));
  CHECK(table.total == total);
  CHECK(std::fabs(table.aggregate_mean - weighted / total) <= 1e-12);
  CHECK(std::fabs(table.aggregate_mean - strategies::estimate_metric(log)) <= 1e-12);
}

TEST_CASE("percent completion difference is a plain percentage-point gap") {
  CHECK(stats::percent_completion_difference(0.283, 0.5) == doctest::Approx(-21.7).epsilon(1e-9));
  CHECK(stats::percent_completion_difference(0.5, 0.5) == 0.0);

  const core::RunLog perturbed = make_log({0.2, 0.4}, {1, 1});
  const core::RunLog original = make_log({1.0, 0.8, 0.6}, {1, 1, 1});
  const double pcd = stats::percent_completion_difference(
      std::vector<core::RunLog>{perturbed}, std::vector<core::RunLog>{original});
  CHECK(pcd == doctest::Approx(-50.0).epsilon(1e-9));
  CHECK_THROWS_AS((void)stats::percent_completion_difference(std::vector<core::RunLog>{},
                                                             std::vector<core::RunLog>{original}),
                  std::invalid_argument);
}

TEST_CASE("csv writers emit fixed headers and six-decimal rows") {
  const core::RunLog log = make_log({1.0, 0.0}, {1.5, 2.5}, {"original", "dL"});

  std::ostringstream curve_out;
  stats::write_curve_csv(curve_out, stats::cost_error_curve({log}, 0.5, 2));
  CHECK(curve_out.str() ==
        "bin_lo,bin_hi,mean_err,std_err\n"
        "0.000000,2.000000,0.500000,0.000000\n"
        "2.000000,4.000000,0.000000,0.000000\n");

  std::ostringstream trials_out;
  stats::write_trials_csv(trials_out, stats::trials_per_cost(log));
  CHECK(trials_out.str() ==
        "cumulative_cost,trials\n"
        "1.500000,1\n"
        "4.000000,2\n");

  std::ostringstream breakdown_out;
  stats::write_breakdown_csv(breakdown_out, stats::metric_breakdown(log));
  CHECK(breakdown_out.str() ==
        "tag,count,mean_metric\n"
        "original,1,1.000000\n"
        "dL,1,0.000000\n"
        "aggregate,2,0.500000\n");
}

TEST_CASE("degenerate cost ranges still produce a usable curve") {
  // All trials at cost zero: every bin upper edge is zero, so each bin holds
  // the final estimate's error.
  const core::RunLog log = make_log({1.0, 0.0}, {0.0, 0.0});
  const stats::CostErrorCurve curve = stats::cost_error_curve({log}, 0.5, 3);
  for (const double err : curve.mean_err) CHECK(err == 0.0);
  for (const double hi : curve.bin_hi) CHECK(hi == 0.0);

  // A lone log yields zero spread in every bin.
  const stats::CostErrorCurve single = stats::cost_error_curve({sampled_standard_log(5)}, 0.8, 7);
  for (const double sd : single.std_err) CHECK(sd == 0.0);
}
