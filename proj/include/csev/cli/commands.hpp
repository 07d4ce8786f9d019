#pragma once

#include <iosfwd>
#include <string>

#include "csev/cli/config.hpp"

namespace csev::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;  // violated invariant inside a run
inline constexpr int kExitUsage = 2;     // bad config, missing inputs, IO errors

// Samples one evaluation set per seed into <run dir>/sets/ and writes the
// canonical config copy. Prints per-seed category counts and feasibility
// confirmations.
int cmd_gen(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

// Executes every (strategy plan, seed) pair against the generated sets and
// writes one JSONL log each under <run dir>/logs/, plus a manifest carrying
// the config hash and the file inventory. Requires cmd_gen outputs.
int cmd_run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

// Aggregates the logs listed in the manifest into CSV files under
// <run dir>/report/: one cost-error curve per strategy (referenced against
// the same seed's standard-run sample mean), one trials-per-cost series and
// one per-tag breakdown per (strategy, seed), and a completion-difference
// summary. Rejects a manifest whose config hash does not match the config,
// logs with mixed environment kinds, and configs without a standard plan to
// serve as the reference.
int cmd_report(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

// The built-in end-to-end scenario: gen, run, and report of demo_config.
int cmd_demo(const std::string& output_dir, std::ostream& out, std::ostream& err);

// Tabletop, 250 instances over seeds {1, 5, 12}, noisy oracle, standard +
// limited-intervention + budget-capped contrast evaluation.
ExperimentConfig demo_config(const std::string& output_dir);

}  // namespace csev::cli
