#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ransim/harness/presets.hpp"
#include "ransim/harness/simulation.hpp"

namespace {

using namespace ransim;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int run_command(const std::string& scenario, const std::string& design, std::optional<std::uint64_t> seed,
                const std::string& out_csv, const std::string& trace, const std::string& audit,
                const std::string& snapshot) {
  ScenarioConfig config = resolve_scenario(scenario);
  if (!design.empty()) {
    const auto d = parse_design(design);
    if (!d) throw Error(ErrorCode::validation_error, "design: unknown design '" + design + "'");
    config.design = *d;
  }
  RunOptions options;
  options.trace = !trace.empty();
  options.snapshot = !snapshot.empty();
  const MetricsReport report = run_scenario(config, seed, options);

  std::ofstream out(out_csv);
  if (!out) throw std::runtime_error("cannot write " + out_csv);
  write_csv(out, report.rows);
  if (!trace.empty()) write_file(trace, report.trace);
  if (!snapshot.empty()) write_file(snapshot, report.snapshot);
  if (!audit.empty()) {
    std::ofstream a(audit);
    if (!a) throw std::runtime_error("cannot write " + audit);
    write_audit(a, report);
  }
  const auto& agg = report.aggregates;
  std::cout << report.scenario << " " << to_string(report.design) << " seed=" << report.seed
            << " attempts=" << agg.overall.attempts << " successes=" << agg.overall.successes
            << " backhaul_bytes=" << report.link_bytes << "\n";
  return 0;
}

int compare_command(const std::string& scenario, std::optional<std::uint64_t> seed, const std::string& dir) {
  const ScenarioConfig config = resolve_scenario(scenario);
  const auto reports = compare_designs(config, seed);
  write_comparison_dir(dir, reports);
  write_comparison(std::cout, reports);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ransim: RAN-delegated 5G core simulator"};
  app.require_subcommand(1);

  std::string scenario;
  std::string design;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string trace;
  std::string audit;
  std::string snapshot;

  auto* run = app.add_subcommand("run", "Run one scenario under one design");
  run->add_option("--scenario", scenario, "Scenario file or preset name")->required();
  run->add_option("--design", design, "baseline, colocated, decision-cache or logic-replication");
  run->add_option("--seed", seed, "Seed override");
  run->add_option("--out", out, "Per-attempt CSV")->required();
  run->add_option("--trace", trace, "Message trace CSV");
  run->add_option("--audit", audit, "Key residency and aggregate report");
  run->add_option("--cache-snapshot", snapshot, "Live RAN cache entries at the end of the run");

  std::string compare_dir;
  auto* compare = app.add_subcommand("compare", "Run all four designs on one workload");
  compare->add_option("--scenario", scenario, "Scenario file or preset name")->required();
  compare->add_option("--seed", seed, "Seed override");
  compare->add_option("--out", compare_dir, "Output directory")->required();

  std::string show_name;
  auto* presets = app.add_subcommand("presets", "Bundled scenarios");
  presets->require_subcommand(1);
  auto* list = presets->add_subcommand("list", "Print preset names");
  auto* show = presets->add_subcommand("show", "Print a preset document");
  show->add_option("name", show_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_command(scenario, design, seed, out, trace, audit, snapshot);
    if (*compare) return compare_command(scenario, seed, compare_dir);
    if (*list) {
      for (auto name : preset_names()) std::cout << name << "\n";
      return 0;
    }
    if (*show) {
      const auto json = preset_json(show_name);
      if (!json) throw Error(ErrorCode::validation_error, "presets: unknown preset '" + show_name + "'");
      std::cout << *json << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
