#include "ransim/core/nf_registry.hpp"

#include <algorithm>

#include "ransim/common.hpp"

namespace ransim {

std::string_view to_string(NfKind kind) noexcept {
  switch (kind) {
    case NfKind::amf: return "AMF";
    case NfKind::ausf: return "AUSF";
    case NfKind::udm: return "UDM";
    case NfKind::smf: return "SMF";
    case NfKind::pcf: return "PCF";
    case NfKind::upf: return "UPF";
    case NfKind::seaf: return "SEAF";
  }
  return "?";
}

void NfRegistry::add(NfKind kind, std::string id) {
  const bool exists = std::any_of(instances_.begin(), instances_.end(),
                                  [&](const NfInstance& i) { return i.id == id; });
  if (exists) throw Error(ErrorCode::invalid_argument, "duplicate NF id: " + id);
  instances_.push_back(NfInstance{kind, std::move(id), 0});
}

const std::string& NfRegistry::select_nf(NfKind kind) const {
  const NfInstance* best = nullptr;
  for (const auto& inst : instances_) {
    if (inst.kind != kind) continue;
    if (best == nullptr || inst.load < best->load || (inst.load == best->load && inst.id < best->id)) {
      best = &inst;
    }
  }
  if (best == nullptr) {
    throw Error(ErrorCode::nf_unavailable, "no " + std::string(to_string(kind)) + " instance");
  }
  return best->id;
}

NfInstance& NfRegistry::at(std::string_view id) {
  auto it = std::find_if(instances_.begin(), instances_.end(),
                         [&](const NfInstance& i) { return i.id == id; });
  if (it == instances_.end()) throw Error(ErrorCode::nf_unavailable, "unknown NF " + std::string(id));
  return *it;
}

const NfInstance& NfRegistry::at(std::string_view id) const {
  return const_cast<NfRegistry*>(this)->at(id);
}

void NfRegistry::acquire(std::string_view id) { ++at(id).load; }

void NfRegistry::release(std::string_view id) {
  auto& inst = at(id);
  if (inst.load > 0) --inst.load;
}

std::int64_t NfRegistry::load(std::string_view id) const { return at(id).load; }

}  // namespace ransim
