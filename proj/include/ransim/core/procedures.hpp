#pragma once

// Core-centric registration: AKA through AMF/AUSF/UDM/SEAF followed by PDU
// session establishment through SMF/PCF/UPF, each message an event.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ransim/core/core_network.hpp"
#include "ransim/link/fabric.hpp"
#include "ransim/protocol.hpp"
#include "ransim/sim/kernel.hpp"

namespace ransim {

inline constexpr SimTime kDefaultRequestTimeout = 10'000;
inline constexpr SimTime kDefaultReauthInterval = 60'000;

/// Backhaul messages of one successful standard registration:
/// RegistrationRequest, AuthenticationRequest, AuthenticationResponse,
/// RegistrationAccept, PduSessionEstablishmentRequest, PduSessionAccept.
inline constexpr int kStandardBackhaulMessages = 6;
/// Radio legs of the same flow, including the UE's initial request.
inline constexpr int kStandardRadioLegs = 6;
/// NF-to-NF hops: four for authentication, six for the session.
inline constexpr int kStandardCoreHops = 10;
/// Core re-authentication: challenge down, response up, result down.
inline constexpr int kReauthBackhaulMessages = 3;

struct CoreContext {
  Kernel& kernel;
  Fabric& fabric;
  CoreNetwork& core;
  RandomSource& av_rng;
  SimTime request_timeout = kDefaultRequestTimeout;
  std::string ran = "ran";
};

struct RegistrationResult {
  Outcome outcome = Outcome::timeout;
  std::optional<SessionRecord> session;
  std::optional<KeyHierarchy> network_keys;
  SubscriptionPolicy subscription;
  SimTime finished_at = 0;
};

using RegistrationCallback = std::function<void(const RegistrationResult&)>;

/// Starts when `request` has reached the RAN. `done` runs exactly once:
/// at completion, rejection, or after `request_timeout`.
/// `ue` must outlive the flow.
void run_standard_registration(const CoreContext& ctx, UeEndpoint& ue, RegistrationRequest request,
                               AccountId account, RegistrationCallback done);

/// Network-initiated AKA round for a UE that already holds a session.
void run_core_reauthentication(const CoreContext& ctx, UeEndpoint& ue, RegistrationRequest request,
                               AccountId account, RegistrationCallback done);

/// Schedules `tick` at established_at + k * interval for every k >= 1 with
/// a tick time before `horizon`. Returns the tick times.
std::vector<SimTime> monitor_and_reauthenticate(Kernel& kernel, const SessionRecord& session,
                                                SimTime interval, SimTime horizon,
                                                std::function<void(SimTime)> tick);

}  // namespace ransim
