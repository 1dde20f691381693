#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ransim/crypto/keys.hpp"
#include "ransim/protocol.hpp"

namespace ransim {

struct SubscriptionPolicy {
  std::set<SliceId> allowed_slices;
  std::set<std::string> authorized_services;
  QosClass qos_class = QosClass::best_effort;
  std::map<std::string, std::string> preferences;

  bool allows_slice(std::string_view slice) const {
    return allowed_slices.contains(std::string(slice));
  }
  bool authorizes(std::string_view service) const {
    return authorized_services.contains(std::string(service));
  }

  friend bool operator==(const SubscriptionPolicy&, const SubscriptionPolicy&) = default;
};

/// Home-network truth for one subscriber (UDR row).
struct SubscriberRecord {
  std::string supi;
  RootSecret root_secret;
  SequenceState sequence;
  SubscriptionPolicy subscription;
  NetworkId home_network;
};

/// What the UDM hands back to the AUSF.
struct IssuedVector {
  UeIdentity identity;
  AuthenticationVector av;
  SubscriptionPolicy subscription;
};

/// UDM/UDR of one network.
class SubscriberDatabase {
 public:
  explicit SubscriberDatabase(NetworkId network) : network_(std::move(network)) {}

  /// Throws Error(invalid_argument) on a duplicate supi or an empty slice set.
  const UeIdentity& provision(SubscriberRecord record);

  const SubscriberRecord* find(std::string_view supi) const;
  const SubscriberRecord* find_by_suci(std::string_view suci) const;

  /// Empty when the SUCI does not resolve to a subscriber of this network.
  std::optional<IssuedVector> generate_av(std::string_view suci, std::string_view serving_network,
                                          RandomSource& rng);

  /// Sequence state mutated in place; used when seeding a prior
  /// authentication before the run starts.
  SubscriberRecord* find_mutable(std::string_view supi);

  const NetworkId& network() const noexcept { return network_; }
  std::size_t size() const noexcept { return records_.size(); }

 private:
  NetworkId network_;
  std::map<std::string, SubscriberRecord, std::less<>> records_;
  std::map<std::string, std::string, std::less<>> suci_to_supi_;
  std::map<std::string, UeIdentity, std::less<>> identities_;
};

}  // namespace ransim
