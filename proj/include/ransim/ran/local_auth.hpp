#pragma once

#include <cstdint>
#include <map>

#include "ransim/crypto/keys.hpp"

namespace ransim {

/// RAN-side challenge for UEs whose K_SEAF is cached. Nonces come from a
/// per-RAN counter; only the outstanding nonce for a UE is accepted and it
/// is consumed by the first answer.
class LocalAuthenticator {
 public:
  std::uint64_t issue(const CachedId& ue);

  /// Checks `proof` against K_NAS derived from the cached K_SEAF.
  bool verify(const CachedId& ue, std::uint64_t nonce, const Digest& proof, const KSeaf& cached);

  bool outstanding(const CachedId& ue) const { return outstanding_.contains(ue); }
  std::uint64_t last_nonce() const noexcept { return counter_; }

 private:
  std::uint64_t counter_ = 0;
  std::map<CachedId, std::uint64_t> outstanding_;
};

}  // namespace ransim
