#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ransim/core/subscriber.hpp"
#include "ransim/link/backhaul_link.hpp"
#include "ransim/ran/ric.hpp"
#include "ransim/ue/ue_profile.hpp"

namespace ransim {

struct PopulationConfig {
  std::string name;
  std::size_t count = 0;
  Behavior behavior = Behavior::interactive;
  bool express_eligible = false;
  /// Present in its home network's UDM. Ignored for attackers.
  bool provisioned = true;
  /// Empty: the serving network.
  NetworkId home_network;
  SliceId slice = "embb";
  std::string service = "web";
  SubscriptionPolicy subscription;
  SimTime period_ms = 0;
  SimTime hold_ms = 0;
  ArrivalSpec arrival;
};

enum class PrewarmKind { decision, state, both };

std::string_view to_string(PrewarmKind kind) noexcept;

/// Entries pushed into the RAN caches before the run, from a prior
/// authentication of every UE in `population`.
struct PrewarmConfig {
  std::string population;
  PrewarmKind kind = PrewarmKind::both;
  SimTime ttl_ms = 3'600'000;
};

struct ScenarioConfig {
  std::string name = "scenario";
  std::uint64_t seed = 1;
  SimTime horizon_ms = 60'000;
  Design design = Design::baseline;
  NetworkId serving_network = "serving";

  BackhaulProfile backhaul;
  BackhaulProfile home_link;
  SimTime radio_latency_ms = 5;
  SimTime core_hop_latency_ms = 1;
  SimTime request_timeout_ms = 10'000;
  SimTime reauth_interval_ms = 60'000;
  std::uint64_t default_message_bytes = 512;
  std::map<std::string, std::uint64_t, std::less<>> message_bytes;

  std::vector<PopulationConfig> populations;
  std::vector<PrewarmConfig> prewarm;

  bool dos_filter = true;
  DosFilterConfig dos;
  double bandwidth_fraction = 0.10;
  SimTime probe_interval_ms = 1000;
  SimTime probe_timeout_ms = 2000;
  SimTime utilization_window_ms = 1000;

  ProbationaryPolicy probationary;
  XAppDelays xapp_delays;
  std::size_t cache_capacity = 10'000;
  SimTime capture_ttl_ms = 3'600'000;

  /// Throws Error(validation_error) naming the field, or
  /// Error(invalid_budget) for xApp delays outside [10, 1000] ms.
  void validate() const;

  const PopulationConfig* population(std::string_view name) const;
};

/// Throws Error(parse_error) with a line number for malformed JSON and
/// Error(validation_error) naming the field for bad content.
ScenarioConfig parse_scenario(std::string_view json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Exit status for a failure: 2 for scenario problems, 1 otherwise.
int exit_code_for(const Error& error) noexcept;

}  // namespace ransim
