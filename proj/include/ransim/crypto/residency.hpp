#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ransim/crypto/keys.hpp"

namespace ransim {

enum class HostClass { ue, edge, core_datacenter, home_network };

std::string_view to_string(HostClass host) noexcept;

inline constexpr std::string_view kFlagRootAtEdge = "root secret resident at edge";
inline constexpr std::string_view kFlagAusfAtEdge = "K_AUSF resident at edge";
inline constexpr std::string_view kFlagSeafAtEdge = "K_SEAF resident at edge";

/// Records which key levels were ever stored on which class of host during
/// a run. Entities report custody as they take it.
class KeyResidencyLog {
 public:
  void record(HostClass host, KeyLevel level) { held_.emplace(host, level); }

  bool resident(HostClass host, KeyLevel level) const { return held_.contains({host, level}); }

  /// Sorted (host, level) pairs.
  std::vector<std::pair<HostClass, KeyLevel>> entries() const { return {held_.begin(), held_.end()}; }

  /// Edge-exposure flags, most severe first.
  std::vector<std::string> flags() const;

 private:
  std::set<std::pair<HostClass, KeyLevel>> held_;
};

}  // namespace ransim
