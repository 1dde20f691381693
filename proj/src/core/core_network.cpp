#include "ransim/core/core_network.hpp"

namespace ransim {

std::optional<std::uint32_t> AddressPool::allocate() {
  std::uint32_t candidate = base_;
  for (std::uint32_t used : used_) {
    if (used != candidate) break;
    ++candidate;
  }
  if (candidate - base_ >= size_) return std::nullopt;
  used_.insert(candidate);
  return candidate;
}

void AddressPool::release(std::uint32_t address) { used_.erase(address); }

std::string format_address(std::uint32_t a) {
  return std::to_string(a >> 24) + "." + std::to_string((a >> 16) & 0xff) + "." +
         std::to_string((a >> 8) & 0xff) + "." + std::to_string(a & 0xff);
}

CoreNetwork::CoreNetwork(NetworkId serving_network, AddressPool pool, HostClass host,
                         KeyResidencyLog* residency)
    : serving_network_(std::move(serving_network)),
      pool_(pool),
      host_(host),
      residency_(residency),
      local_(serving_network_) {}

void CoreNetwork::add_home_network(SubscriberDatabase& db) { partners_[db.network()] = &db; }

SubscriberDatabase* CoreNetwork::database_for(std::string_view home_network) {
  if (home_network == serving_network_) return &local_;
  const auto it = partners_.find(home_network);
  return it == partners_.end() ? nullptr : it->second;
}

SessionResult CoreNetwork::establish_session(const AuthenticatedContext& ue, const SliceId& slice,
                                             QosClass qos, SimTime now) {
  SessionResult result;
  if (!ue.authenticated()) {
    result.status = SessionStatus::auth_required;
    return result;
  }
  if (!ue.subscription.allows_slice(slice)) {
    result.status = SessionStatus::policy_denied;
    return result;
  }
  release_session(ue.identity.cached_id);

  SessionRecord rec;
  try {
    rec.smf = nfs_.select_nf(NfKind::smf);
    rec.upf = nfs_.select_nf(NfKind::upf);
  } catch (const Error&) {
    result.status = SessionStatus::nf_unavailable;
    return result;
  }
  const auto address = pool_.allocate();
  if (!address) {
    result.status = SessionStatus::nf_unavailable;
    return result;
  }
  nfs_.acquire(rec.smf);
  nfs_.acquire(rec.upf);
  rec.ue = ue.identity.cached_id;
  rec.slice = slice;
  rec.assigned_address = *address;
  rec.qos_class = qos;
  rec.established_at = now;
  sessions_[rec.ue] = rec;

  result.status = SessionStatus::established;
  result.session = rec;
  return result;
}

void CoreNetwork::release_session(const CachedId& ue) {
  const auto it = sessions_.find(ue);
  if (it == sessions_.end()) return;
  pool_.release(it->second.assigned_address);
  nfs_.release(it->second.smf);
  nfs_.release(it->second.upf);
  sessions_.erase(it);
}

const SessionRecord* CoreNetwork::session(const CachedId& ue) const {
  const auto it = sessions_.find(ue);
  return it == sessions_.end() ? nullptr : &it->second;
}

void CoreNetwork::record_authentication(const CachedId& ue, SimTime at) { authenticated_[ue] = at; }

}  // namespace ransim
