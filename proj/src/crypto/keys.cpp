#include "ransim/crypto/keys.hpp"

#include <stdexcept>
#include <vector>

namespace ransim {

namespace {

std::vector<std::uint8_t> concat(std::initializer_list<ByteView> parts) {
  std::vector<std::uint8_t> out;
  for (ByteView p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Digest prf(const KeyBytes& key, std::string_view label, ByteView context) {
  return derive_key(key, label, context);
}

}  // namespace

std::string_view to_string(KeyLevel level) noexcept {
  switch (level) {
    case KeyLevel::root: return "K";
    case KeyLevel::ausf: return "K_AUSF";
    case KeyLevel::seaf: return "K_SEAF";
    case KeyLevel::amf: return "K_AMF";
    case KeyLevel::nas: return "K_NAS";
    case KeyLevel::up: return "K_UP";
    case KeyLevel::rrc: return "K_RRC";
  }
  return "?";
}

std::string_view to_string(ChallengeStatus status) noexcept {
  switch (status) {
    case ChallengeStatus::accepted: return "accepted";
    case ChallengeStatus::mac_failure: return "mac-failure";
    case ChallengeStatus::sync_failure: return "sync-failure";
  }
  return "?";
}

KeyBytes derive_key(const KeyBytes& parent, std::string_view label, ByteView context) {
  if (label.empty()) throw std::invalid_argument("derive_key: empty label");
  static constexpr std::uint8_t separator = 0x00;
  const auto message = concat({as_bytes(label), ByteView(&separator, 1), context});
  return hmac_sha256(parent, message);
}

UeIdentity conceal_identity(std::string_view supi, std::string_view home_network) {
  if (supi.empty()) throw std::invalid_argument("conceal_identity: empty supi");
  const std::string key_label = "home-network-concealment:" + std::string(home_network);
  const KeyBytes concealment_key = sha256(key_label);
  const Digest masked = prf(concealment_key, "SUCI", as_bytes(supi));

  UeIdentity id;
  id.supi = supi;
  id.suci = "suci-" + std::string(home_network) + "-" + to_hex(ByteView(masked.data(), 16));
  id.cached_id = sha256(id.suci);
  return id;
}

KAusf derive_k_ausf(const RootSecret& k, std::string_view serving_network, const Nonce128& rand) {
  const auto ctx = concat({as_bytes(serving_network), ByteView(rand)});
  return KAusf{derive_key(k.bytes, "AUSF", ctx)};
}

KSeaf derive_k_seaf(const KAusf& k_ausf, std::string_view serving_network) {
  return KSeaf{derive_key(k_ausf.bytes, "SEAF", as_bytes(serving_network))};
}

SessionKeys derive_session_keys(const KSeaf& k_seaf, const CachedId& ue) {
  const ByteView ctx(ue);
  SessionKeys keys;
  keys.k_amf = KAmf{derive_key(k_seaf.bytes, "AMF", ctx)};
  keys.k_nas = KNas{derive_key(keys.k_amf.bytes, "NAS", ctx)};
  keys.k_up = KUp{derive_key(k_seaf.bytes, "UP", ctx)};
  keys.k_rrc = KRrc{derive_key(k_seaf.bytes, "RRC", ctx)};
  return keys;
}

KeyHierarchy expand_hierarchy(const KAusf& k_ausf, std::string_view serving_network,
                              const UeIdentity& ue) {
  KeyHierarchy h;
  h.k_ausf = k_ausf;
  h.k_seaf = derive_k_seaf(k_ausf, serving_network);
  const SessionKeys s = derive_session_keys(h.k_seaf, ue);
  h.k_amf = s.k_amf;
  h.k_nas = s.k_nas;
  h.k_up = s.k_up;
  h.k_rrc = s.k_rrc;
  h.serving_network = serving_network;
  return h;
}

namespace {

Digest token_mac(const RootSecret& k, std::uint64_t sqn, const Nonce128& rand) {
  const auto sqn_bytes = be64(sqn);
  const auto msg = concat({ByteView(sqn_bytes), ByteView(rand)});
  return prf(k.bytes, "MAC", msg);
}

Digest challenge_response(const RootSecret& k, const Nonce128& rand) {
  return prf(k.bytes, "RES", ByteView(rand));
}

}  // namespace

AuthenticationVector generate_av(const RootSecret& k, SequenceState& sequence,
                                 std::string_view serving_network, RandomSource& rng) {
  if (serving_network.empty()) throw std::invalid_argument("generate_av: empty serving network");
  AuthenticationVector av;
  av.rand = rng.bytes<16>();
  sequence.sqn_network += 1;
  av.autn.sqn = sequence.sqn_network;
  av.autn.mac = token_mac(k, av.autn.sqn, av.rand);
  av.xres = challenge_response(k, av.rand);
  av.k_derived = derive_k_ausf(k, serving_network, av.rand);
  return av;
}

ServingAuthenticationVector to_serving_vector(const AuthenticationVector& av,
                                              std::string_view serving_network) {
  return ServingAuthenticationVector{av.rand, av.autn, av.xres,
                                     derive_k_seaf(av.k_derived, serving_network)};
}

ChallengeResult ue_verify_and_respond(UsimState& usim, const Nonce128& rand, const AuthToken& autn) {
  ChallengeResult result;
  if (token_mac(usim.k, autn.sqn, rand) != autn.mac) {
    result.status = ChallengeStatus::mac_failure;
    return result;
  }

  const std::uint64_t window = usim.replay_window == 0 ? 1 : usim.replay_window;
  const bool fresh = autn.sqn > usim.sqn_ue;
  const bool in_window = !fresh && window > 1 && autn.sqn + window > usim.sqn_ue &&
                         !usim.accepted.contains(autn.sqn);
  if (!fresh && !in_window) {
    result.status = ChallengeStatus::sync_failure;
    return result;
  }

  if (fresh) usim.sqn_ue = autn.sqn;
  if (window > 1) {
    usim.accepted.insert(autn.sqn);
    while (!usim.accepted.empty() && *usim.accepted.begin() + window <= usim.sqn_ue) {
      usim.accepted.erase(usim.accepted.begin());
    }
  }
  result.status = ChallengeStatus::accepted;
  result.response = challenge_response(usim.k, rand);
  return result;
}

KeyHierarchy ue_derive_hierarchy(const UsimState& usim, const Nonce128& rand,
                                 std::string_view serving_network, const UeIdentity& ue) {
  return expand_hierarchy(derive_k_ausf(usim.k, serving_network, rand), serving_network, ue);
}

Digest local_challenge_proof(const KNas& k_nas, std::uint64_t nonce, const CachedId& cached_id) {
  const auto nonce_bytes = be64(nonce);
  const auto msg = concat({ByteView(nonce_bytes), ByteView(cached_id)});
  return prf(k_nas.bytes, "LOCAL-AUTH", msg);
}

}  // namespace ransim
