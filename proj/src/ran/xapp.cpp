#include "ransim/ran/xapp.hpp"

#include "ransim/common.hpp"

namespace ransim {

void validate_budget(SimTime delay) {
  if (delay < kMinXAppDelay || delay > kMaxXAppDelay) {
    throw Error(ErrorCode::invalid_budget,
                "processing_delay " + std::to_string(delay) + " ms outside [10, 1000]");
  }
}

XAppId XAppRegistry::register_xapp(XAppDescriptor descriptor) {
  if (has(descriptor.name)) {
    throw Error(ErrorCode::already_registered, "xApp already registered: " + descriptor.name);
  }
  validate_budget(descriptor.processing_delay);
  std::string name = descriptor.name;
  by_name_.emplace(std::move(name), std::move(descriptor));
  return static_cast<XAppId>(by_name_.size());
}

const XAppDescriptor& XAppRegistry::descriptor(std::string_view name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) throw Error(ErrorCode::invalid_argument, "unknown xApp " + std::string(name));
  return it->second;
}

EventId XAppRegistry::dispatch(Kernel& kernel, std::string_view name, Kernel::Handler work) const {
  const XAppDescriptor& d = descriptor(name);
  ++invocations_[d.name];
  return kernel.schedule(d.processing_delay, d.name, "xapp", std::move(work));
}

std::uint64_t XAppRegistry::invocations(std::string_view name) const {
  const auto it = invocations_.find(name);
  return it == invocations_.end() ? 0 : it->second;
}

}  // namespace ransim
