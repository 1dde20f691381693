#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ransim/common.hpp"
#include "ransim/core/nf_registry.hpp"
#include "ransim/core/subscriber.hpp"
#include "ransim/crypto/residency.hpp"

namespace ransim {

/// Integer IPv4-style address pool; always hands out the lowest free address.
class AddressPool {
 public:
  AddressPool(std::uint32_t base, std::uint32_t size) : base_(base), size_(size) {}

  std::optional<std::uint32_t> allocate();
  void release(std::uint32_t address);

  bool contains(std::uint32_t address) const { return address >= base_ && address - base_ < size_; }
  std::size_t in_use() const noexcept { return used_.size(); }

 private:
  std::uint32_t base_;
  std::uint32_t size_;
  std::set<std::uint32_t> used_;
};

std::string format_address(std::uint32_t address);

struct SessionRecord {
  CachedId ue{};
  SliceId slice;
  std::uint32_t assigned_address = 0;
  std::string upf;
  std::string smf;
  QosClass qos_class = QosClass::best_effort;
  SimTime established_at = 0;
};

struct AuthenticatedContext {
  UeIdentity identity;
  std::optional<KeyHierarchy> keys;
  SubscriptionPolicy subscription;

  bool authenticated() const noexcept { return keys.has_value(); }
};

enum class SessionStatus { established, auth_required, policy_denied, nf_unavailable };

struct SessionResult {
  SessionStatus status = SessionStatus::auth_required;
  std::optional<SessionRecord> session;
};

/// State of the serving 5GC: NF instances, local UDM, roaming partners,
/// active PDU sessions and the auth transcript log.
class CoreNetwork {
 public:
  CoreNetwork(NetworkId serving_network, AddressPool pool, HostClass host,
              KeyResidencyLog* residency = nullptr);

  CoreNetwork(const CoreNetwork&) = delete;
  CoreNetwork& operator=(const CoreNetwork&) = delete;

  const NetworkId& serving_network() const noexcept { return serving_network_; }
  HostClass host() const noexcept { return host_; }
  KeyResidencyLog* residency() noexcept { return residency_; }

  NfRegistry& nfs() noexcept { return nfs_; }
  const NfRegistry& nfs() const noexcept { return nfs_; }

  SubscriberDatabase& local_subscribers() noexcept { return local_; }

  /// Registers a partner home network reachable by referral. Not owned.
  void add_home_network(SubscriberDatabase& db);

  /// UDM responsible for `home_network`, or null if unknown.
  SubscriberDatabase* database_for(std::string_view home_network);

  bool is_roaming(std::string_view home_network) const { return home_network != serving_network_; }

  /// SMF and UPF selected via select_nf; one active session per UE.
  SessionResult establish_session(const AuthenticatedContext& ue, const SliceId& slice, QosClass qos,
                                  SimTime now);
  void release_session(const CachedId& ue);
  const SessionRecord* session(const CachedId& ue) const;
  const std::map<CachedId, SessionRecord>& sessions() const noexcept { return sessions_; }

  void record_authentication(const CachedId& ue, SimTime at);
  bool has_authentication(const CachedId& ue) const { return authenticated_.contains(ue); }

  const AddressPool& pool() const noexcept { return pool_; }

 private:
  NetworkId serving_network_;
  AddressPool pool_;
  HostClass host_;
  KeyResidencyLog* residency_;
  NfRegistry nfs_;
  SubscriberDatabase local_;
  std::map<NetworkId, SubscriberDatabase*, std::less<>> partners_;
  std::map<CachedId, SessionRecord> sessions_;
  std::map<CachedId, SimTime> authenticated_;
};

}  // namespace ransim
