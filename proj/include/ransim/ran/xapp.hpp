#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ransim/protocol.hpp"
#include "ransim/sim/kernel.hpp"

namespace ransim {

inline constexpr SimTime kMinXAppDelay = 10;
inline constexpr SimTime kMaxXAppDelay = 1000;

struct XAppDescriptor {
  std::string name;
  std::set<RequestType> handles;
  SimTime processing_delay = kMinXAppDelay;
};

using XAppId = std::uint32_t;

/// Throws Error(invalid_budget) unless delay lies in [10, 1000] ms.
void validate_budget(SimTime delay);

class XAppRegistry {
 public:
  /// Throws Error(already_registered) for a duplicate name and
  /// Error(invalid_budget) for an out-of-range delay.
  XAppId register_xapp(XAppDescriptor descriptor);

  bool has(std::string_view name) const { return by_name_.find(name) != by_name_.end(); }
  const XAppDescriptor& descriptor(std::string_view name) const;
  std::size_t size() const noexcept { return by_name_.size(); }

  /// Runs `work` once the xApp's processing delay has elapsed.
  EventId dispatch(Kernel& kernel, std::string_view name, Kernel::Handler work) const;

  std::uint64_t invocations(std::string_view name) const;

 private:
  std::map<std::string, XAppDescriptor, std::less<>> by_name_;
  mutable std::map<std::string, std::uint64_t, std::less<>> invocations_;
};

}  // namespace ransim
