#pragma once

// Key hierarchy and challenge-response model for 5G-AKA.
//
//   K (USIM, UDR)
//   └─ K_AUSF   bound to serving network and RAND
//      └─ K_SEAF  bound to serving network
//         ├─ K_AMF ─ K_NAS
//         ├─ K_UP
//         └─ K_RRC
//
// Every derivation and MAC is HMAC-SHA256 with a label for domain
// separation. Session keys take the UE's cached id as context, so any holder
// of K_SEAF can compute them without K.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ransim/crypto/primitives.hpp"
#include "ransim/sim/random.hpp"

namespace ransim {

using KeyBytes = std::array<std::uint8_t, 32>;
using Nonce128 = std::array<std::uint8_t, 16>;
using NetworkId = std::string;
using CachedId = Digest;

enum class KeyLevel { root, ausf, seaf, amf, nas, up, rrc };

std::string_view to_string(KeyLevel level) noexcept;

/// A 256-bit key tagged with its level so keys cannot be mixed up across
/// the hierarchy.
template <KeyLevel Level>
struct TypedKey {
  static constexpr KeyLevel level = Level;
  KeyBytes bytes{};

  friend bool operator==(const TypedKey&, const TypedKey&) = default;
};

using RootSecret = TypedKey<KeyLevel::root>;
using KAusf = TypedKey<KeyLevel::ausf>;
using KSeaf = TypedKey<KeyLevel::seaf>;
using KAmf = TypedKey<KeyLevel::amf>;
using KNas = TypedKey<KeyLevel::nas>;
using KUp = TypedKey<KeyLevel::up>;
using KRrc = TypedKey<KeyLevel::rrc>;

/// First 8 bytes of SHA-256 over the key, hex encoded. Safe to log.
template <KeyLevel L>
std::string fingerprint(const TypedKey<L>& key) {
  const Digest d = sha256(ByteView(key.bytes));
  return to_hex(ByteView(d.data(), 8));
}

/// Keyed PRF: HMAC-SHA256(parent, label || 0x00 || context).
/// Throws std::invalid_argument on an empty label.
KeyBytes derive_key(const KeyBytes& parent, std::string_view label, ByteView context);

struct UeIdentity {
  std::string supi;
  std::string suci;
  CachedId cached_id{};

  friend bool operator==(const UeIdentity&, const UeIdentity&) = default;
};

/// SUCI is a deterministic keyed transform of the SUPI under a key owned by
/// the home network; cached_id = SHA-256(SUCI). Throws on an empty supi.
UeIdentity conceal_identity(std::string_view supi, std::string_view home_network);

struct SequenceState {
  std::uint64_t sqn_network = 0;
  std::uint64_t sqn_ue = 0;
};

struct AuthToken {
  std::uint64_t sqn = 0;
  Digest mac{};

  friend bool operator==(const AuthToken&, const AuthToken&) = default;
};

/// The AV as it travels from UDM to AUSF (carrying K_AUSF) and from AUSF to
/// SEAF (carrying K_SEAF).
template <class DerivedKey>
struct BasicAuthenticationVector {
  Nonce128 rand{};
  AuthToken autn;
  Digest xres{};
  DerivedKey k_derived;
};

using AuthenticationVector = BasicAuthenticationVector<KAusf>;
using ServingAuthenticationVector = BasicAuthenticationVector<KSeaf>;

struct SessionKeys {
  KAmf k_amf;
  KNas k_nas;
  KUp k_up;
  KRrc k_rrc;

  friend bool operator==(const SessionKeys&, const SessionKeys&) = default;
};

struct KeyHierarchy {
  KAusf k_ausf;
  KSeaf k_seaf;
  KAmf k_amf;
  KNas k_nas;
  KUp k_up;
  KRrc k_rrc;
  NetworkId serving_network;

  SessionKeys session_keys() const { return {k_amf, k_nas, k_up, k_rrc}; }

  friend bool operator==(const KeyHierarchy&, const KeyHierarchy&) = default;
};

/// USIM contents. `replay_window` of 1 accepts only sqn > sqn_ue; a wider
/// window also accepts not-yet-seen values within that distance.
struct UsimState {
  RootSecret k;
  std::uint64_t sqn_ue = 0;
  std::uint32_t replay_window = 1;
  std::set<std::uint64_t> accepted;
};

KAusf derive_k_ausf(const RootSecret& k, std::string_view serving_network, const Nonce128& rand);
KSeaf derive_k_seaf(const KAusf& k_ausf, std::string_view serving_network);
SessionKeys derive_session_keys(const KSeaf& k_seaf, const CachedId& ue);
inline SessionKeys derive_session_keys(const KSeaf& k_seaf, const UeIdentity& ue) {
  return derive_session_keys(k_seaf, ue.cached_id);
}

/// Builds the hierarchy below K_AUSF.
KeyHierarchy expand_hierarchy(const KAusf& k_ausf, std::string_view serving_network,
                              const UeIdentity& ue);

/// UDM side. Increments sqn_network, binds it into AUTN and derives K_AUSF.
/// Throws std::invalid_argument for an empty serving network.
AuthenticationVector generate_av(const RootSecret& k, SequenceState& sequence,
                                 std::string_view serving_network, RandomSource& rng);

/// AUSF side: replace K_AUSF with K_SEAF before handing the AV to the SEAF.
ServingAuthenticationVector to_serving_vector(const AuthenticationVector& av,
                                              std::string_view serving_network);

enum class ChallengeStatus { accepted, mac_failure, sync_failure };

std::string_view to_string(ChallengeStatus status) noexcept;

struct ChallengeResult {
  ChallengeStatus status = ChallengeStatus::mac_failure;
  Digest response{};

  bool ok() const noexcept { return status == ChallengeStatus::accepted; }
};

/// UE side. Checks the MAC with K and the sequence number against the replay
/// window; on success advances sqn_ue and returns RES.
ChallengeResult ue_verify_and_respond(UsimState& usim, const Nonce128& rand, const AuthToken& autn);

/// UE-side derivation of the full hierarchy once a challenge is accepted.
KeyHierarchy ue_derive_hierarchy(const UsimState& usim, const Nonce128& rand,
                                 std::string_view serving_network, const UeIdentity& ue);

/// Proof of K_NAS possession used by RAN-local challenges.
Digest local_challenge_proof(const KNas& k_nas, std::uint64_t nonce, const CachedId& cached_id);

}  // namespace ransim
