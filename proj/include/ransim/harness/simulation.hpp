#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "ransim/harness/metrics.hpp"
#include "ransim/harness/scenario.hpp"

namespace ransim {

struct RunOptions {
  bool trace = false;
  bool snapshot = false;
};

/// Deterministic in (config, seed). `seed` overrides config.seed.
MetricsReport run_scenario(const ScenarioConfig& config, std::optional<std::uint64_t> seed = std::nullopt,
                           RunOptions options = {});

/// The same workload and seed under every design, in design order.
std::vector<MetricsReport> compare_designs(const ScenarioConfig& config,
                                           std::optional<std::uint64_t> seed = std::nullopt);

/// <dir>/<design>.csv for each report plus <dir>/comparison.csv.
void write_comparison_dir(const std::filesystem::path& dir, const std::vector<MetricsReport>& reports);

inline constexpr Design kAllDesigns[] = {Design::baseline, Design::colocated, Design::decision_cache,
                                         Design::logic_replication};

}  // namespace ransim
