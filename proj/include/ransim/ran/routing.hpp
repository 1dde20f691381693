#pragma once

#include <cstdint>

#include "ransim/protocol.hpp"
#include "ransim/ran/backhaul_monitor.hpp"

namespace ransim {

/// Everything route_registration looks at, gathered by the RIC.
struct RoutingInputs {
  bool filter_drop = false;
  bool blacklisted = false;
  bool express_eligible = false;
  bool live_decision_entry = false;
  /// State caching and logic replication are deployed; without them there
  /// is no local alternative to the core.
  bool logic_replication = false;
  BackhaulHealth health;
  std::uint64_t link_bandwidth = 1'250'000;
  double bandwidth_threshold = 0.10;  // fraction of capacity that must be free
  bool live_state_entry = false;
  bool probationary_enabled = false;
  bool unknown_roamer = false;
};

/// Total: exactly one decision for every input.
RoutingDecision route_registration(const RoutingInputs& in);

/// Health good enough to send the request to the core.
bool backhaul_usable(const BackhaulHealth& health, std::uint64_t link_bandwidth, double threshold);

}  // namespace ransim
