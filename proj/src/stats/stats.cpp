#include "csev/stats/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace csev::stats {

namespace {

// Error series of one log: |running mean - reference| after each trial,
// indexed by the trial's cumulative cost.
std::vector<double> error_series(const core::RunLog& log, double reference) {
  std::vector<double> err;
  err.reserve(log.trials.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < log.trials.size(); ++k) {
    sum += log.trials[k].metric;
    err.push_back(std::fabs(sum / static_cast<double>(k + 1) - reference));
  }
  return err;
}

// Latest error at or below `budget`; the empty-prefix estimate is 0.
double error_at(const core::RunLog& log, const std::vector<double>& err, double budget,
                double reference) {
  double value = std::fabs(0.0 - reference);
  for (std::size_t k = 0; k < err.size(); ++k) {
    if (log.cumulative_cost[k] > budget) break;
    value = err[k];
  }
  return value;
}

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

CostErrorCurve cost_error_curve(const std::vector<core::RunLog>& logs,
                                const std::vector<double>& references, int bins) {
  if (logs.empty()) throw std::invalid_argument("cost_error_curve: no logs");
  if (references.size() != logs.size()) {
    throw std::invalid_argument("cost_error_curve: one reference per log required");
  }
  if (bins < 1) throw std::invalid_argument("cost_error_curve: bins must be >= 1");
  for (double reference : references) {
    if (reference < 0.0 || reference > 1.0) {
      throw std::invalid_argument("cost_error_curve: reference outside [0, 1]");
    }
  }
  double max_cost = 0.0;
  for (const core::RunLog& log : logs) {
    if (log.trials.empty()) throw std::invalid_argument("cost_error_curve: empty log");
    max_cost = std::max(max_cost, log.total_cost());
  }

  std::vector<std::vector<double>> series;
  series.reserve(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) {
    series.push_back(error_series(logs[i], references[i]));
  }

  CostErrorCurve curve;
  const double width = max_cost / static_cast<double>(bins);
  for (int b = 0; b < bins; ++b) {
    const double lo = width * static_cast<double>(b);
    // The last bin's edge is max_cost itself so every trial lands in a bin.
    const double hi = b + 1 == bins ? max_cost : width * static_cast<double>(b + 1);
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
      const double e = error_at(logs[i], series[i], hi, references[i]);
      sum += e;
      sum_sq += e * e;
    }
    const double n = static_cast<double>(logs.size());
    const double mean = sum / n;
    curve.bin_lo.push_back(lo);
    curve.bin_hi.push_back(hi);
    curve.mean_err.push_back(mean);
    curve.std_err.push_back(std::sqrt(std::max(0.0, sum_sq / n - mean * mean)));
  }
  return curve;
}

CostErrorCurve cost_error_curve(const std::vector<core::RunLog>& logs, double reference,
                                int bins) {
  return cost_error_curve(logs, std::vector<double>(logs.size(), reference), bins);
}

TrialsPerCost trials_per_cost(const core::RunLog& log) {
  if (log.trials.empty()) throw std::invalid_argument("trials_per_cost: empty log");
  TrialsPerCost series;
  series.cost = log.cumulative_cost;
  series.trials.resize(log.trials.size());
  for (std::size_t k = 0; k < log.trials.size(); ++k) {
    series.trials[k] = static_cast<int>(k) + 1;
  }
  return series;
}

BreakdownTable metric_breakdown(const core::RunLog& log) {
  // Canonical row order: originals first, then language tags, then scene tags.
  static const std::vector<std::string> kOrder = {"original", "dL",  "dLB",  "dLB1", "dLB2",
                                                  "dS",       "dSB", "dSB1", "dSB2"};
  std::map<std::string, std::pair<int, double>> acc;
  double total_sum = 0.0;
  for (const core::TrialRecord& trial : log.trials) {
    auto& [count, sum] = acc[core::to_string(trial.tag)];
    count += 1;
    sum += trial.metric;
    total_sum += trial.metric;
  }

  BreakdownTable table;
  for (const std::string& tag : kOrder) {
    const auto it = acc.find(tag);
    if (it == acc.end()) continue;
    const auto& [count, sum] = it->second;
    table.rows.push_back({tag, count, sum / static_cast<double>(count)});
    table.total += count;
  }
  table.aggregate_mean =
      table.total == 0 ? 0.0 : total_sum / static_cast<double>(table.total);
  return table;
}

double percent_completion_difference(double perturbed_mean, double original_mean) {
  return (perturbed_mean - original_mean) * 100.0;
}

double percent_completion_difference(const std::vector<core::RunLog>& perturbed,
                                     const std::vector<core::RunLog>& original) {
  const auto mean_of = [](const std::vector<core::RunLog>& logs, const char* side) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const core::RunLog& log : logs) {
      for (const core::TrialRecord& trial : log.trials) {
        sum += trial.metric;
        count += 1;
      }
    }
    if (count == 0) {
      throw std::invalid_argument(std::string("percent_completion_difference: no ") + side +
                                  " trials");
    }
    return sum / static_cast<double>(count);
  };
  return percent_completion_difference(mean_of(perturbed, "perturbed"),
                                       mean_of(original, "original"));
}

void write_curve_csv(std::ostream& out, const CostErrorCurve& curve) {
  out << "bin_lo,bin_hi,mean_err,std_err\n";
  for (std::size_t b = 0; b < curve.bin_lo.size(); ++b) {
    out << csv_num(curve.bin_lo[b]) << ',' << csv_num(curve.bin_hi[b]) << ','
        << csv_num(curve.mean_err[b]) << ',' << csv_num(curve.std_err[b]) << '\n';
  }
}

void write_trials_csv(std::ostream& out, const TrialsPerCost& series) {
  out << "cumulative_cost,trials\n";
  for (std::size_t k = 0; k < series.cost.size(); ++k) {
    out << csv_num(series.cost[k]) << ',' << series.trials[k] << '\n';
  }
}

void write_breakdown_csv(std::ostream& out, const BreakdownTable& table) {
  out << "tag,count,mean_metric\n";
  for (const BreakdownRow& row : table.rows) {
    out << row.tag << ',' << row.count << ',' << csv_num(row.mean_metric) << '\n';
  }
  out << "aggregate," << table.total << ',' << csv_num(table.aggregate_mean) << '\n';
}

}  // namespace csev::stats
