#pragma once

// Vocabulary shared by the UE, RAN and core sides of a registration.

#include <optional>
#include <string>
#include <string_view>

#include "ransim/common.hpp"
#include "ransim/crypto/keys.hpp"

namespace ransim {

using SliceId = std::string;

enum class QosClass { low_latency, best_effort };

enum class RequestType { registration, session, reauthentication };

std::string_view to_string(QosClass qos) noexcept;
std::string_view to_string(RequestType type) noexcept;

struct RegistrationRequest {
  std::string ue_id;
  CachedId cached_id{};
  std::string suci;
  NetworkId home_network;
  SliceId slice;
  std::string service;
  QosClass qos = QosClass::best_effort;
};

/// Path a registration takes; exactly one per request.
enum class RoutingDecision { standard, express, delegated, probationary, reject };

enum class Outcome {
  success,
  timeout,
  subscriber_not_found,
  mac_failure,
  sync_failure,
  policy_denied,
  challenge_failed,
  filtered,
  rejected,
};

std::string_view to_string(RoutingDecision path) noexcept;
std::string_view to_string(Outcome outcome) noexcept;

/// What the network needs from a UE during a procedure.
class UeEndpoint {
 public:
  virtual ~UeEndpoint() = default;

  virtual const UeIdentity& identity() const = 0;

  /// Entity name used for message routing and traces.
  virtual const std::string& endpoint() const = 0;

  /// AKA challenge from the SEAF. On acceptance the UE also derives and
  /// keeps its own key hierarchy.
  virtual ChallengeResult on_auth_challenge(const Nonce128& rand, const AuthToken& autn,
                                            std::string_view serving_network) = 0;

  /// RAN-local challenge; empty if the UE holds no K_NAS.
  virtual std::optional<Digest> on_local_challenge(std::uint64_t nonce) = 0;

  virtual std::optional<KeyHierarchy> current_keys() const = 0;
};

}  // namespace ransim
