#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "run.hpp"

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("quasimod");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("QUASIMOD_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  using quasimod::cli::RunConfig;
  RunConfig cfg;
  std::string side = "forward";
  std::string grid;

  CLI::App app{"Asymmetric gauges, quasi-metrics and modular spaces on finite data"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("-i,--input", cfg.inputs, "Input JSON document (repeatable)")->check(CLI::ExistingFile);
  app.add_option("-o,--output", cfg.output, "Report path; .csv writes the distance table");
  app.add_option("--tol", cfg.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--sample", cfg.sample, "Random triangle instances instead of the full sweep");
  app.add_option("--grid", grid, "Comma-separated scales, overriding the document grid");
  app.add_option("--conorm", cfg.conorm, "t-conorm override")->check(CLI::IsMember({"max", "prob_sum", "bounded_sum"}));
  app.add_option("--side", side, "Ball side")->check(CLI::IsMember({"forward", "backward", "sym"}))->capture_default_str();
  app.add_option("--radius", cfg.radius, "Ball radius r");
  app.add_option("--scale", cfg.scale, "Ball scale t");
  app.add_option("--eps", cfg.eps, "Net radius for sequence families");
  app.add_option("--tail-budget", cfg.tail_budget, "Largest admissible tail index");
  app.add_option("--schedule", cfg.schedule, "Cost schedule JSON for graph")->check(CLI::ExistingFile);
  app.add_option("--time", cfg.time, "Evaluation time for the cost schedule");
  app.add_option("--threshold", cfg.threshold, "Luxemburg level")->capture_default_str();
  app.add_option("--lambda-max", cfg.lambda_max, "Largest probed lambda")->capture_default_str();
  for (const auto& name : quasimod::cli::commands()) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : quasimod::cli::kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.side = quasimod::parse_side(side);
  try {
    if (!grid.empty()) {
      for (const auto& tok : CLI::detail::split(grid, ',')) cfg.grid.push_back(std::stod(tok));
    }
  } catch (const std::exception&) {
    std::cerr << "error: --grid expects comma-separated numbers\n";
    return quasimod::cli::kUsage;
  }
  return quasimod::cli::run(cfg, std::cerr);
}
