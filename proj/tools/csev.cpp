#include <iostream>
#include <sstream>
#include <string>

#include "csev/cli/commands.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
  CLI::App app{"contrast-set evaluation workbench"};
  app.require_subcommand(1);

  std::string config_path;
  std::string demo_out = "runs";
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress progress output");

  CLI::App* gen = app.add_subcommand("gen", "sample evaluation sets for every seed");
  gen->add_option("-c,--config", config_path, "experiment config file")->required();
  CLI::App* run = app.add_subcommand("run", "execute every strategy on the generated sets");
  run->add_option("-c,--config", config_path, "experiment config file")->required();
  CLI::App* report = app.add_subcommand("report", "aggregate run logs into CSV reports");
  report->add_option("-c,--config", config_path, "experiment config file")->required();
  CLI::App* demo = app.add_subcommand("demo", "run the built-in end-to-end scenario");
  demo->add_option("-o,--out", demo_out, "output directory");
  for (CLI::App* sub : {gen, run, report, demo}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : csev::cli::kExitUsage;
  }

  std::ostringstream sink;
  std::ostream& out = quiet ? static_cast<std::ostream&>(sink) : std::cout;

  try {
    if (demo->parsed()) return csev::cli::cmd_demo(demo_out, out, std::cerr);
    const csev::cli::ExperimentConfig cfg = csev::cli::read_config_file(config_path);
    if (gen->parsed()) return csev::cli::cmd_gen(cfg, out, std::cerr);
    if (run->parsed()) return csev::cli::cmd_run(cfg, out, std::cerr);
    return csev::cli::cmd_report(cfg, out, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return csev::cli::kExitUsage;
  }
}
