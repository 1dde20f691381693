#include "ransim/ran/cache_entries.hpp"

namespace ransim {

DecisionCacheEntry make_decision_entry(const CachedId& ue, const KSeaf& k_seaf,
                                       const SubscriptionPolicy& policy, const SliceId& slice,
                                       SimTime ttl, SimTime now) {
  DecisionCacheEntry e;
  e.ue_cached_id = ue;
  e.cached_keys.k_seaf = k_seaf;
  const std::uint32_t units = policy.qos_class == QosClass::low_latency ? 4 : 1;
  for (RequestType t : {RequestType::registration, RequestType::session, RequestType::reauthentication}) {
    e.control_plane_decisions[t] = ControlPlaneDecisions{true, slice};
    e.data_plane_decisions[t] = DataPlaneDecisions{"upf-edge", units};
  }
  e.ttl = ttl;
  e.created_at = now;
  return e;
}

StateCacheEntry make_state_entry(const CachedId& ue, const KSeaf& k_seaf, const SubscriptionPolicy& policy,
                                 const SliceId& slice, SimTime ttl, SimTime now) {
  StateCacheEntry s;
  s.decisions = make_decision_entry(ue, k_seaf, policy, slice, ttl, now);
  s.control_plane_state = policy;
  s.data_plane_state = DataPlaneState{s.decisions.data_plane_decisions.at(RequestType::session).resource_units,
                                      policy.qos_class};
  s.policy_version = now;
  return s;
}

}  // namespace ransim
