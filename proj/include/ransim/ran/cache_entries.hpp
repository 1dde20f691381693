#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ransim/common.hpp"
#include "ransim/core/subscriber.hpp"
#include "ransim/protocol.hpp"

namespace ransim {

/// Keys a RAN may hold for a UE. K_SEAF is the highest level.
struct CachedKeys {
  KSeaf k_seaf;
};

struct ControlPlaneDecisions {
  bool access_granted = true;
  SliceId slice_grant;
};

struct DataPlaneDecisions {
  std::string traffic_steering;
  std::uint32_t resource_units = 0;
};

struct DecisionCacheEntry {
  CachedId ue_cached_id{};
  CachedKeys cached_keys;
  std::map<RequestType, ControlPlaneDecisions> control_plane_decisions;
  std::map<RequestType, DataPlaneDecisions> data_plane_decisions;
  SimTime ttl = 0;
  SimTime created_at = 0;

  const CachedId& key() const noexcept { return ue_cached_id; }
  SimTime expires_at() const noexcept { return created_at + ttl; }
  bool live(SimTime now) const noexcept { return now < expires_at(); }
  bool handles(RequestType type) const { return control_plane_decisions.contains(type); }
};

struct DataPlaneState {
  std::uint32_t resource_units = 0;
  QosClass qos = QosClass::best_effort;
};

struct StateCacheEntry {
  DecisionCacheEntry decisions;
  SubscriptionPolicy control_plane_state;
  DataPlaneState data_plane_state;
  SimTime policy_version = 0;  // creation time of the policy snapshot

  const CachedId& key() const noexcept { return decisions.ue_cached_id; }
  SimTime expires_at() const noexcept { return decisions.expires_at(); }
  bool live(SimTime now) const noexcept { return decisions.live(now); }
  bool handles(RequestType type) const { return decisions.handles(type); }
};

/// Decisions granted for registration and session requests from one
/// authenticated context.
DecisionCacheEntry make_decision_entry(const CachedId& ue, const KSeaf& k_seaf,
                                       const SubscriptionPolicy& policy, const SliceId& slice,
                                       SimTime ttl, SimTime now);

StateCacheEntry make_state_entry(const CachedId& ue, const KSeaf& k_seaf, const SubscriptionPolicy& policy,
                                 const SliceId& slice, SimTime ttl, SimTime now);

}  // namespace ransim
