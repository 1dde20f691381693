#include "ransim/ran/routing.hpp"

namespace ransim {

bool backhaul_usable(const BackhaulHealth& health, std::uint64_t link_bandwidth, double threshold) {
  return health.reachable &&
         static_cast<double>(health.available_bandwidth) >= threshold * static_cast<double>(link_bandwidth);
}

RoutingDecision route_registration(const RoutingInputs& in) {
  if (in.filter_drop || in.blacklisted) return RoutingDecision::reject;
  if (in.express_eligible && in.live_decision_entry) return RoutingDecision::express;
  if (!in.logic_replication) return RoutingDecision::standard;
  if (backhaul_usable(in.health, in.link_bandwidth, in.bandwidth_threshold)) return RoutingDecision::standard;
  if (in.live_state_entry) return RoutingDecision::delegated;
  if (in.probationary_enabled && in.unknown_roamer) return RoutingDecision::probationary;
  return RoutingDecision::reject;
}

}  // namespace ransim
