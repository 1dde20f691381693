#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ransim/protocol.hpp"

namespace ransim {

enum class Behavior { interactive, periodic_sensor, roamer, attacker_flood };

std::string_view to_string(Behavior behavior) noexcept;
std::optional<Behavior> parse_behavior(std::string_view name);

enum class ArrivalKind { fixed, poisson, burst, rate };

std::string_view to_string(ArrivalKind kind) noexcept;
std::optional<ArrivalKind> parse_arrival_kind(std::string_view name);

/// When the UEs of one population first show up.
///   fixed   at_ms + i * spacing_ms
///   poisson exponential gaps at rate_per_s from at_ms
///   burst   burst_size UEs together at at_ms, the rest as a Poisson tail at tail_rate_per_s
///   rate    evenly spaced at rate_per_s from at_ms
struct ArrivalSpec {
  ArrivalKind kind = ArrivalKind::fixed;
  SimTime at_ms = 0;
  SimTime spacing_ms = 0;
  double rate_per_s = 0.0;
  std::size_t burst_size = 0;
  double tail_rate_per_s = 0.0;
};

struct UeProfile {
  std::string ue_id;
  std::string population;
  UeIdentity identity;
  std::optional<UsimState> usim;
  Behavior behavior = Behavior::interactive;
  bool express_eligible = false;
  NetworkId home_network;
  SliceId slice;
  std::string service;
  SimTime period_ms = 0;  // periodic-sensor only
  SimTime hold_ms = 0;    // periodic-sensor only
};

}  // namespace ransim
