#include "ransim/common.hpp"

namespace ransim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::subscriber_not_found: return "subscriber-not-found";
    case ErrorCode::nf_unavailable: return "nf-unavailable";
    case ErrorCode::auth_required: return "auth-required";
    case ErrorCode::policy_denied: return "policy-denied";
    case ErrorCode::already_registered: return "already-registered";
    case ErrorCode::invalid_budget: return "invalid-budget";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::validation_error: return "validation-error";
  }
  return "unknown";
}

}  // namespace ransim
