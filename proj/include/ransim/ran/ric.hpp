#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ransim/core/procedures.hpp"
#include "ransim/ran/backhaul_monitor.hpp"
#include "ransim/ran/cache_entries.hpp"
#include "ransim/ran/dos_filter.hpp"
#include "ransim/ran/local_auth.hpp"
#include "ransim/ran/routing.hpp"
#include "ransim/ran/ttl_cache.hpp"
#include "ransim/ran/xapp.hpp"

namespace ransim {

/// Where the core runs and what the RIC may do on its behalf.
enum class Design { baseline, colocated, decision_cache, logic_replication };

std::string_view to_string(Design design) noexcept;
std::optional<Design> parse_design(std::string_view name);

inline bool uses_ric(Design d) noexcept {
  return d == Design::decision_cache || d == Design::logic_replication;
}

struct ProbationaryPolicy {
  bool enabled = true;
  SliceId slice = "probation";
  std::set<std::string> services{"messaging"};
};

struct XAppDelays {
  SimTime triage = 10;
  SimTime express = 10;
  SimTime auth_proxy = 10;
  SimTime policy_proxy = 10;
  SimTime session_proxy = 10;
  SimTime probationary = 10;
  SimTime monitor = 10;
};

namespace xapp {
inline constexpr const char* kTriage = "triage";
inline constexpr const char* kExpress = "express";
inline constexpr const char* kAuthProxy = "auth-proxy";
inline constexpr const char* kPolicyProxy = "policy-proxy";
inline constexpr const char* kSessionProxy = "session-proxy";
inline constexpr const char* kProbationary = "probationary";
inline constexpr const char* kMonitor = "monitor";
}  // namespace xapp

struct RicConfig {
  Design design = Design::baseline;
  bool dos_filter = true;
  DosFilterConfig dos;
  AssessmentConfig assessment;
  double bandwidth_threshold = 0.10;
  ProbationaryPolicy probationary;
  XAppDelays delays;
  SimTime capture_ttl = 3'600'000;
  std::size_t cache_capacity = TtlCache<DecisionCacheEntry>::kDefaultCapacity;
  std::uint32_t ran_pool_base = 0x0A800001;
  std::uint32_t ran_pool_size = 1u << 16;
};

/// A session granted by the RAN without the core.
struct LocalSession {
  CachedId ue{};
  std::string ue_id;
  SliceId slice;
  std::set<std::string> services;
  std::uint32_t address = 0;
  RoutingDecision path = RoutingDecision::express;
  bool locally_granted = true;
  bool probationary = false;
  SimTime established_at = 0;
};

struct AccessLogEntry {
  SimTime time = 0;
  std::string ue;
  std::string event;
  std::string detail;

  friend bool operator==(const AccessLogEntry&, const AccessLogEntry&) = default;
};

struct AttemptResult {
  Outcome outcome = Outcome::rejected;
  RoutingDecision path = RoutingDecision::standard;
  SimTime finished_at = 0;
};

using AttemptCallback = std::function<void(const AttemptResult&)>;

/// The RAN node: forwards to the core, or with a RIC design, triages each
/// request and may serve it locally through xApps.
class Ric {
 public:
  Ric(Fabric& fabric, CoreContext core, RicConfig config, KeyResidencyLog* residency = nullptr);

  Ric(const Ric&) = delete;
  Ric& operator=(const Ric&) = delete;

  /// Starts backhaul probing (logic replication only).
  void start(SimTime until);

  void mark_express_eligible(const CachedId& ue) { eligible_.insert(ue); }
  bool express_eligible(const CachedId& ue) const { return eligible_.contains(ue); }

  void store_decision(DecisionCacheEntry entry);
  void store_state(StateCacheEntry entry);

  /// The request has just reached the RAN over the radio. `ue` must outlive
  /// the attempt.
  void handle_registration(UeEndpoint& ue, RegistrationRequest request, AccountId account,
                           AttemptCallback done);

  /// Periodic re-authentication of an established session. On failure the
  /// session is torn down.
  void handle_reauthentication(UeEndpoint& ue, RegistrationRequest request, AccountId account,
                               std::function<void(bool)> done);

  /// UE disconnect: drops local and core sessions.
  void release(const CachedId& ue);

  /// Health as the RIC currently believes it; refreshed at most once per
  /// probe interval.
  BackhaulHealth health(SimTime now);

  const RicConfig& config() const noexcept { return config_; }
  const XAppRegistry& xapps() const noexcept { return xapps_; }
  const DosFilter& filter() const noexcept { return filter_; }
  TtlCache<DecisionCacheEntry>& decision_cache() noexcept { return decisions_; }
  TtlCache<StateCacheEntry>& state_cache() noexcept { return states_; }
  const std::map<CachedId, LocalSession>& local_sessions() const noexcept { return sessions_; }
  const std::vector<AccessLogEntry>& access_log() const noexcept { return log_; }
  const std::set<CachedId>& blacklist() const noexcept { return blacklist_; }
  const ProbeMonitor* probes() const noexcept { return probes_.get(); }
  std::size_t deferred_pending() const noexcept { return deferred_.size(); }

  /// One line per live entry: cache,cached_id,k_seaf fingerprint,ttl remaining.
  void write_snapshot(std::ostream& out, SimTime now) const;

 private:
  struct Attempt;
  struct Deferred {
    UeEndpoint* ue;
    RegistrationRequest request;
  };

  void triage(const std::shared_ptr<Attempt>& a);
  void route(const std::shared_ptr<Attempt>& a);
  void run_standard(const std::shared_ptr<Attempt>& a);
  void run_express(const std::shared_ptr<Attempt>& a);
  void run_delegated(const std::shared_ptr<Attempt>& a);
  void run_probationary(const std::shared_ptr<Attempt>& a);
  void local_challenge(const std::shared_ptr<Attempt>& a, std::function<void(std::uint64_t, std::optional<Digest>)> k);
  void reject(const std::shared_ptr<Attempt>& a, Outcome outcome, RoutingDecision path);
  void accept(const std::shared_ptr<Attempt>& a, LocalSession session);
  void finish(const std::shared_ptr<Attempt>& a, Outcome outcome, RoutingDecision path);

  void capture(const CachedId& ue, const KSeaf& k_seaf, const SubscriptionPolicy& policy, const SliceId& slice);
  void start_deferred();
  void log(const std::string& ue, std::string event, std::string detail = {});
  bool known(const CachedId& ue, SimTime now) const;

  Fabric& fabric_;
  Kernel& kernel_;
  CoreContext core_;
  RicConfig config_;
  KeyResidencyLog* residency_;
  XAppRegistry xapps_;
  DosFilter filter_;
  TtlCache<DecisionCacheEntry> decisions_;
  TtlCache<StateCacheEntry> states_;
  LocalAuthenticator local_auth_;
  AddressPool ran_pool_;
  std::set<CachedId> eligible_;
  std::set<CachedId> blacklist_;
  std::map<CachedId, LocalSession> sessions_;
  std::vector<AccessLogEntry> log_;
  std::unique_ptr<ProbeMonitor> probes_;
  std::optional<BackhaulHealth> health_;
  std::vector<Deferred> deferred_;
  AccountId probe_account_ = 0;
  AccountId deferred_account_ = 0;
};

}  // namespace ransim
