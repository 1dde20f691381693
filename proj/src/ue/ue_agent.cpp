#include "ransim/ue/ue_agent.hpp"

namespace ransim {

std::string_view to_string(Behavior behavior) noexcept {
  switch (behavior) {
    case Behavior::interactive: return "interactive";
    case Behavior::periodic_sensor: return "periodic-sensor";
    case Behavior::roamer: return "roamer";
    case Behavior::attacker_flood: return "attacker-flood";
  }
  return "?";
}

std::optional<Behavior> parse_behavior(std::string_view name) {
  for (Behavior b : {Behavior::interactive, Behavior::periodic_sensor, Behavior::roamer, Behavior::attacker_flood}) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

std::string_view to_string(ArrivalKind kind) noexcept {
  switch (kind) {
    case ArrivalKind::fixed: return "fixed";
    case ArrivalKind::poisson: return "poisson";
    case ArrivalKind::burst: return "burst";
    case ArrivalKind::rate: return "rate";
  }
  return "?";
}

std::optional<ArrivalKind> parse_arrival_kind(std::string_view name) {
  for (ArrivalKind k : {ArrivalKind::fixed, ArrivalKind::poisson, ArrivalKind::burst, ArrivalKind::rate}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ChallengeResult UeAgent::on_auth_challenge(const Nonce128& rand, const AuthToken& autn,
                                           std::string_view serving_network) {
  if (!profile_.usim) return ChallengeResult{ChallengeStatus::mac_failure, {}};
  ChallengeResult r = ue_verify_and_respond(*profile_.usim, rand, autn);
  if (r.ok()) keys_ = ue_derive_hierarchy(*profile_.usim, rand, serving_network, profile_.identity);
  return r;
}

std::optional<Digest> UeAgent::on_local_challenge(std::uint64_t nonce) {
  if (!keys_) return std::nullopt;
  return local_challenge_proof(keys_->k_nas, nonce, profile_.identity.cached_id);
}

RegistrationRequest UeAgent::registration_request(std::string_view /*serving_network*/) const {
  RegistrationRequest r;
  r.ue_id = profile_.ue_id;
  r.cached_id = profile_.identity.cached_id;
  r.suci = profile_.identity.suci;
  r.home_network = profile_.home_network;
  r.slice = profile_.slice;
  r.service = profile_.service;
  return r;
}

}  // namespace ransim
