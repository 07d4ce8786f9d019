#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "csev/core/trial.hpp"

namespace csev::stats {

// Absolute estimation error as a function of cumulative cost, aggregated
// across one run log per seed. Bins are equal-width over [0, max cost across
// all logs]; a bin's per-log value is the error after the last trial whose
// cumulative cost is at or below the bin's upper edge (the latest estimate
// the experimenter would hold at that budget). Bins before a log's first
// trial carry the empty-estimate error |0 - reference|.
struct CostErrorCurve {
  std::vector<double> bin_lo;
  std::vector<double> bin_hi;
  std::vector<double> mean_err;  // mean across logs per bin
  std::vector<double> std_err;   // population standard deviation across logs
};

inline constexpr int kDefaultBins = 50;

// Throws std::invalid_argument when logs is empty, any log has no trials, or
// reference is outside [0, 1]. With bins = 1 the single bin reproduces the
// mean final error exactly.
CostErrorCurve cost_error_curve(const std::vector<core::RunLog>& logs, double reference,
                                int bins = kDefaultBins);

// Per-log reference variant: references[i] is the target for logs[i]. Used
// when every seed's error is measured against that seed's own standard-run
// sample mean. Sizes must match.
CostErrorCurve cost_error_curve(const std::vector<core::RunLog>& logs,
                                const std::vector<double>& references,
                                int bins = kDefaultBins);

// Step series (cumulative cost, trials completed), monotone in both
// coordinates. Throws std::invalid_argument on an empty log.
struct TrialsPerCost {
  std::vector<double> cost;
  std::vector<int> trials;
};

TrialsPerCost trials_per_cost(const core::RunLog& log);

// Per-tag mean metric and trial count, plus the aggregate over all trials.
// Row counts always sum to the log length.
struct BreakdownRow {
  std::string tag;
  int count = 0;
  double mean_metric = 0.0;
};

struct BreakdownTable {
  std::vector<BreakdownRow> rows;  // canonical tag order, present tags only
  int total = 0;
  double aggregate_mean = 0.0;
};

BreakdownTable metric_breakdown(const core::RunLog& log);

// Mean metric of perturbed trials minus mean metric of original trials, in
// percentage points. Throws std::invalid_argument when either side is empty.
double percent_completion_difference(const std::vector<core::RunLog>& perturbed,
                                     const std::vector<core::RunLog>& original);
double percent_completion_difference(double perturbed_mean, double original_mean);

// CSV writers with fixed headers and %.6f formatting so identical inputs
// serialize byte-identically.
void write_curve_csv(std::ostream& out, const CostErrorCurve& curve);
void write_trials_csv(std::ostream& out, const TrialsPerCost& series);
void write_breakdown_csv(std::ostream& out, const BreakdownTable& table);

}  // namespace csev::stats
