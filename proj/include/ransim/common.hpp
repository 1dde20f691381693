#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ransim {

/// Virtual time, integer milliseconds since scenario start.
using SimTime = std::int64_t;

enum class ErrorCode {
  invalid_argument,
  subscriber_not_found,
  nf_unavailable,
  auth_required,
  policy_denied,
  already_registered,
  invalid_budget,
  parse_error,
  validation_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ransim
