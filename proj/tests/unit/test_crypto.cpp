#include <gtest/gtest.h>

#include <stdexcept>

#include "ransim/crypto/keys.hpp"
#include "ransim/crypto/residency.hpp"
#include "support/fixtures.hpp"

using namespace ransim;

namespace {

constexpr std::string_view kServing = "mnc001.mcc001.3gppnetwork.org";

RootSecret fixture_root() {
  RootSecret k;
  for (std::size_t i = 0; i < k.bytes.size(); ++i) k.bytes[i] = static_cast<std::uint8_t>(i);
  return k;
}

Nonce128 fixture_rand() {
  Nonce128 r;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint8_t>(0x10 + i);
  return r;
}

template <class Bytes>
std::string hex(const Bytes& b) {
  return to_hex(ByteView(b));
}

UsimState usim_for(const RootSecret& k) { return UsimState{k, 0, 1, {}}; }

}  // namespace

TEST(Primitives, KnownDigests) {
  const auto v = test_support::load_vectors("kdf_vectors.txt");
  EXPECT_EQ(hex(sha256("abc")), v.at("sha256_abc"));
  EXPECT_EQ(hex(hmac_sha256(ByteView(), as_bytes("abc"))), v.at("hmac_empty_key"));
}

TEST(Primitives, HexRoundTripAndErrors) {
  const auto bytes = from_hex("00ff10");
  EXPECT_EQ(to_hex(bytes), "00ff10");
  EXPECT_THROW(from_hex("abc"), std::invalid_argument);
  EXPECT_THROW(from_hex("zz"), std::invalid_argument);
}

TEST(KeyDerivation, GoldenHierarchy) {
  const auto v = test_support::load_vectors("kdf_vectors.txt");
  const UeIdentity ue = conceal_identity("imsi-001010000000001", kServing);
  EXPECT_EQ(ue.suci, v.at("suci"));
  EXPECT_EQ(hex(ue.cached_id), v.at("cached_id"));

  const KAusf k_ausf = derive_k_ausf(fixture_root(), kServing, fixture_rand());
  const KeyHierarchy h = expand_hierarchy(k_ausf, kServing, ue);
  EXPECT_EQ(hex(h.k_ausf.bytes), v.at("k_ausf"));
  EXPECT_EQ(hex(h.k_seaf.bytes), v.at("k_seaf"));
  EXPECT_EQ(hex(h.k_amf.bytes), v.at("k_amf"));
  EXPECT_EQ(hex(h.k_nas.bytes), v.at("k_nas"));
  EXPECT_EQ(hex(h.k_up.bytes), v.at("k_up"));
  EXPECT_EQ(hex(h.k_rrc.bytes), v.at("k_rrc"));
  EXPECT_EQ(hex(local_challenge_proof(h.k_nas, 7, ue.cached_id)), v.at("local_proof_7"));
}

TEST(KeyDerivation, GoldenAuthToken) {
  const auto v = test_support::load_vectors("kdf_vectors.txt");
  UsimState usim = usim_for(fixture_root());
  // Rebuild the AV the UDM would issue for sqn 1 with the fixture RAND.
  RandomSource unused(0, "unused");
  SequenceState seq;
  AuthenticationVector av = generate_av(fixture_root(), seq, kServing, unused);
  EXPECT_EQ(av.autn.sqn, 1u);
  av.rand = fixture_rand();
  av.autn.mac = {};
  const auto mac = from_hex(v.at("mac"));
  std::copy(mac.begin(), mac.end(), av.autn.mac.begin());
  const ChallengeResult r = ue_verify_and_respond(usim, av.rand, av.autn);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(hex(r.response), v.at("xres"));
}

TEST(KeyDerivation, EmptyLabelRejected) {
  EXPECT_THROW(derive_key(KeyBytes{}, "", ByteView()), std::invalid_argument);
}

TEST(KeyDerivation, SeafHolderDerivesSameSessionKeys) {
  RandomSource rng(5, "keys");
  for (int i = 0; i < 100; ++i) {
    RootSecret k{rng.bytes<32>()};
    const UeIdentity ue = conceal_identity("imsi-" + std::to_string(i), kServing);
    const KAusf k_ausf = derive_k_ausf(k, kServing, rng.bytes<16>());
    const KeyHierarchy core = expand_hierarchy(k_ausf, kServing, ue);
    EXPECT_EQ(derive_session_keys(core.k_seaf, ue), core.session_keys());
  }
}

TEST(Aka, AcceptsFreshVectorAndAgreesOnKeys) {
  RandomSource rng(11, "av");
  const RootSecret k{rng.bytes<32>()};
  SequenceState seq;
  UsimState usim = usim_for(k);
  const UeIdentity ue = conceal_identity("imsi-1", kServing);
  const AuthenticationVector av = generate_av(k, seq, kServing, rng);
  const ChallengeResult r = ue_verify_and_respond(usim, av.rand, av.autn);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.response, av.xres);
  EXPECT_EQ(usim.sqn_ue, 1u);
  const KeyHierarchy ue_keys = ue_derive_hierarchy(usim, av.rand, kServing, ue);
  EXPECT_EQ(ue_keys, expand_hierarchy(av.k_derived, kServing, ue));
  EXPECT_EQ(to_serving_vector(av, kServing).k_derived, ue_keys.k_seaf);
}

TEST(Aka, WrongRootSecretIsMacFailure) {
  RandomSource rng(12, "av");
  SequenceState seq;
  const AuthenticationVector av = generate_av(RootSecret{rng.bytes<32>()}, seq, kServing, rng);
  UsimState attacker = usim_for(RootSecret{rng.bytes<32>()});
  EXPECT_EQ(ue_verify_and_respond(attacker, av.rand, av.autn).status, ChallengeStatus::mac_failure);
}

TEST(Aka, ReplayedVectorIsSyncFailure) {
  RandomSource rng(13, "av");
  const RootSecret k{rng.bytes<32>()};
  SequenceState seq;
  UsimState usim = usim_for(k);
  const AuthenticationVector first = generate_av(k, seq, kServing, rng);
  const AuthenticationVector second = generate_av(k, seq, kServing, rng);
  ASSERT_TRUE(ue_verify_and_respond(usim, second.rand, second.autn).ok());
  EXPECT_EQ(ue_verify_and_respond(usim, first.rand, first.autn).status, ChallengeStatus::sync_failure);
  EXPECT_EQ(ue_verify_and_respond(usim, second.rand, second.autn).status, ChallengeStatus::sync_failure);
}

TEST(Aka, WiderWindowAcceptsOutOfOrderOnce) {
  RandomSource rng(14, "av");
  const RootSecret k{rng.bytes<32>()};
  SequenceState seq;
  UsimState usim{k, 0, 4, {}};
  const auto a = generate_av(k, seq, kServing, rng);
  const auto b = generate_av(k, seq, kServing, rng);
  ASSERT_TRUE(ue_verify_and_respond(usim, b.rand, b.autn).ok());
  EXPECT_TRUE(ue_verify_and_respond(usim, a.rand, a.autn).ok());
  EXPECT_EQ(ue_verify_and_respond(usim, a.rand, a.autn).status, ChallengeStatus::sync_failure);
}

TEST(Aka, EmptyServingNetworkRejected) {
  RandomSource rng(1, "av");
  SequenceState seq;
  EXPECT_THROW(generate_av(RootSecret{}, seq, "", rng), std::invalid_argument);
}

TEST(Identity, CachedIdMatchesSuci) {
  const UeIdentity id = conceal_identity("imsi-99", "home");
  EXPECT_EQ(id.cached_id, sha256(id.suci));
  EXPECT_NE(id.suci.find("suci-home-"), std::string::npos);
  EXPECT_EQ(id.suci.find("imsi-99"), std::string::npos);
  EXPECT_THROW(conceal_identity("", "home"), std::invalid_argument);
}

TEST(Residency, FlagsBySeverity) {
  KeyResidencyLog log;
  EXPECT_TRUE(log.flags().empty());
  log.record(HostClass::edge, KeyLevel::seaf);
  EXPECT_EQ(log.flags(), std::vector<std::string>{std::string(kFlagSeafAtEdge)});
  log.record(HostClass::edge, KeyLevel::root);
  log.record(HostClass::core_datacenter, KeyLevel::ausf);
  const auto flags = log.flags();
  ASSERT_EQ(flags.size(), 2u);
  EXPECT_EQ(flags[0], kFlagRootAtEdge);
}
