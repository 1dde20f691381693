#include "ransim/ran/local_auth.hpp"

namespace ransim {

std::uint64_t LocalAuthenticator::issue(const CachedId& ue) {
  outstanding_[ue] = ++counter_;
  return counter_;
}

bool LocalAuthenticator::verify(const CachedId& ue, std::uint64_t nonce, const Digest& proof,
                                const KSeaf& cached) {
  const auto it = outstanding_.find(ue);
  if (it == outstanding_.end() || it->second != nonce) return false;
  outstanding_.erase(it);
  const SessionKeys keys = derive_session_keys(cached, ue);
  return local_challenge_proof(keys.k_nas, nonce, ue) == proof;
}

}  // namespace ransim
