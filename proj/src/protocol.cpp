#include "ransim/protocol.hpp"

namespace ransim {

std::string_view to_string(QosClass qos) noexcept {
  return qos == QosClass::low_latency ? "low-latency" : "best-effort";
}

std::string_view to_string(RequestType type) noexcept {
  switch (type) {
    case RequestType::registration: return "registration";
    case RequestType::session: return "session";
    case RequestType::reauthentication: return "reauthentication";
  }
  return "?";
}

std::string_view to_string(RoutingDecision path) noexcept {
  switch (path) {
    case RoutingDecision::standard: return "standard";
    case RoutingDecision::express: return "express";
    case RoutingDecision::delegated: return "delegated";
    case RoutingDecision::probationary: return "probationary";
    case RoutingDecision::reject: return "reject";
  }
  return "?";
}

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::success: return "success";
    case Outcome::timeout: return "timeout";
    case Outcome::subscriber_not_found: return "subscriber-not-found";
    case Outcome::mac_failure: return "mac-failure";
    case Outcome::sync_failure: return "sync-failure";
    case Outcome::policy_denied: return "policy-denied";
    case Outcome::challenge_failed: return "challenge-failed";
    case Outcome::filtered: return "filtered";
    case Outcome::rejected: return "rejected";
  }
  return "?";
}

}  // namespace ransim
