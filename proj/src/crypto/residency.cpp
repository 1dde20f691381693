#include "ransim/crypto/residency.hpp"

namespace ransim {

std::string_view to_string(HostClass host) noexcept {
  switch (host) {
    case HostClass::ue: return "ue";
    case HostClass::edge: return "edge";
    case HostClass::core_datacenter: return "core-datacenter";
    case HostClass::home_network: return "home-network";
  }
  return "?";
}

std::vector<std::string> KeyResidencyLog::flags() const {
  std::vector<std::string> out;
  if (resident(HostClass::edge, KeyLevel::root)) out.emplace_back(kFlagRootAtEdge);
  if (resident(HostClass::edge, KeyLevel::ausf)) out.emplace_back(kFlagAusfAtEdge);
  if (resident(HostClass::edge, KeyLevel::seaf)) out.emplace_back(kFlagSeafAtEdge);
  return out;
}

}  // namespace ransim
