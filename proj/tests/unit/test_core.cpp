#include <gtest/gtest.h>

#include <memory>

#include "ransim/core/core_network.hpp"
#include "ransim/core/procedures.hpp"
#include "support/test_ue.hpp"

using namespace ransim;
using ransim::test_support::ScriptedUe;

namespace {

constexpr const char* kServing = "serving-net";

BackhaulProfile healthy() {
  BackhaulProfile p;
  p.base_latency = 10;
  p.bandwidth = 1'250'000;
  return p;
}

struct CoreBed {
  explicit CoreBed(BackhaulProfile profile = healthy())
      : kernel(7),
        backhaul(profile),
        home_link(healthy()),
        fabric(kernel, FabricConfig{}, backhaul, home_link),
        core(kServing, AddressPool(0x0A000001, 1024), HostClass::core_datacenter, &residency),
        av_rng(kernel.seeded_random("av")),
        home_db("home-net") {
    for (const char* id : {"amf-1"}) core.nfs().add(NfKind::amf, id);
    core.nfs().add(NfKind::ausf, "ausf-1");
    core.nfs().add(NfKind::smf, "smf-1");
    core.nfs().add(NfKind::upf, "upf-1");
    core.add_home_network(home_db);
  }

  CoreContext ctx() { return CoreContext{kernel, fabric, core, av_rng}; }

  std::unique_ptr<ScriptedUe> provision(SubscriberDatabase& db, const std::string& supi) {
    RandomSource rng(static_cast<std::uint64_t>(db.size()) + 1, "k-" + supi);
    SubscriberRecord rec;
    rec.supi = supi;
    rec.root_secret = RootSecret{rng.bytes<32>()};
    rec.subscription.allowed_slices = {"embb"};
    rec.subscription.authorized_services = {"web", "messaging"};
    const UeIdentity& id = db.provision(rec);
    return std::make_unique<ScriptedUe>("ue-" + supi, id, rec.root_secret);
  }

  RegistrationRequest request_for(const ScriptedUe& ue, const std::string& home, SliceId slice = "embb") {
    return RegistrationRequest{ue.endpoint(), ue.identity().cached_id, ue.identity().suci, home, slice,
                               "web", QosClass::best_effort};
  }

  Kernel kernel;
  BackhaulLink backhaul;
  BackhaulLink home_link;
  Fabric fabric;
  KeyResidencyLog residency;
  CoreNetwork core;
  RandomSource av_rng;
  SubscriberDatabase home_db;
};

}  // namespace

TEST(NfRegistry, LeastLoadedThenSmallestId) {
  NfRegistry r;
  r.add(NfKind::amf, "amf2");
  r.add(NfKind::amf, "amf1");
  EXPECT_EQ(r.select_nf(NfKind::amf), "amf1");
  for (int i = 0; i < 3; ++i) r.acquire("amf1");
  r.acquire("amf2");
  EXPECT_EQ(r.select_nf(NfKind::amf), "amf2");
  EXPECT_EQ(r.select_nf(NfKind::amf), "amf2");
  r.release("amf2");
  r.release("amf2");
  EXPECT_EQ(r.load("amf2"), 0);
  EXPECT_THROW(r.select_nf(NfKind::smf), Error);
  EXPECT_THROW(r.add(NfKind::smf, "amf1"), Error);
}

TEST(SubscriberDatabase, ProvisionRules) {
  SubscriberDatabase db("net");
  SubscriberRecord rec;
  rec.supi = "imsi-1";
  EXPECT_THROW(db.provision(rec), Error);
  rec.subscription.allowed_slices = {"embb"};
  const UeIdentity id = db.provision(rec);
  EXPECT_THROW(db.provision(rec), Error);
  EXPECT_EQ(db.find_by_suci(id.suci)->supi, "imsi-1");
  RandomSource rng(1, "av");
  EXPECT_FALSE(db.generate_av("suci-unknown", "net", rng).has_value());
  EXPECT_EQ(db.generate_av(id.suci, "net", rng)->av.autn.sqn, 1u);
}

TEST(AddressPool, LowestFreeAndDisjoint) {
  AddressPool pool(0x0A000001, 2);
  EXPECT_EQ(pool.allocate(), 0x0A000001u);
  EXPECT_EQ(pool.allocate(), 0x0A000002u);
  EXPECT_FALSE(pool.allocate().has_value());
  pool.release(0x0A000001);
  EXPECT_EQ(pool.allocate(), 0x0A000001u);
  EXPECT_EQ(format_address(0x0A000001), "10.0.0.1");
}

TEST(EstablishSession, Preconditions) {
  CoreBed bed;
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  AuthenticatedContext ctx{ue->identity(), std::nullopt, {}};
  ctx.subscription.allowed_slices = {"embb"};
  EXPECT_EQ(bed.core.establish_session(ctx, "embb", QosClass::best_effort, 0).status,
            SessionStatus::auth_required);
  ctx.keys = KeyHierarchy{};
  EXPECT_EQ(bed.core.establish_session(ctx, "urllc", QosClass::best_effort, 0).status,
            SessionStatus::policy_denied);
  const auto a = bed.core.establish_session(ctx, "embb", QosClass::best_effort, 0);
  ASSERT_EQ(a.status, SessionStatus::established);
  EXPECT_EQ(bed.core.nfs().load("smf-1"), 1);

  auto ue2 = bed.provision(bed.core.local_subscribers(), "imsi-2");
  AuthenticatedContext ctx2{ue2->identity(), KeyHierarchy{}, ctx.subscription};
  const auto b = bed.core.establish_session(ctx2, "embb", QosClass::best_effort, 0);
  ASSERT_EQ(b.status, SessionStatus::established);
  EXPECT_NE(a.session->assigned_address, b.session->assigned_address);
  bed.core.release_session(ue->identity().cached_id);
  EXPECT_EQ(bed.core.nfs().load("smf-1"), 1);
}

TEST(StandardRegistration, SucceedsWithFixedMessageBudget) {
  CoreBed bed;
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  const AccountId acct = bed.fabric.open_account("imsi-1");
  std::optional<RegistrationResult> result;
  run_standard_registration(bed.ctx(), *ue, bed.request_for(*ue, kServing), acct,
                            [&](const RegistrationResult& r) { result = r; });
  bed.kernel.run_until(20'000);

  ASSERT_TRUE(result);
  EXPECT_EQ(result->outcome, Outcome::success);
  ASSERT_TRUE(result->network_keys && ue->current_keys());
  EXPECT_EQ(result->network_keys->k_seaf, ue->current_keys()->k_seaf);
  EXPECT_EQ(result->network_keys->session_keys(), ue->current_keys()->session_keys());
  EXPECT_EQ(bed.fabric.account(acct).messages, static_cast<std::uint64_t>(kStandardBackhaulMessages));
  EXPECT_EQ(bed.fabric.account(acct).bytes, 6u * 512u);

  // 5 radio legs after the initial request, 6 backhaul legs of 10 ms plus
  // 1 ms serialization, 10 core hops of 1 ms.
  EXPECT_EQ(result->finished_at, 5 * 5 + 6 * 11 + 10 * 1);

  int core_hops = 0, radio = 0;
  for (const auto& m : bed.fabric.messages()) {
    if (m.medium == Medium::core) ++core_hops;
    if (m.medium == Medium::radio) ++radio;
  }
  EXPECT_EQ(core_hops, kStandardCoreHops);
  EXPECT_EQ(radio, kStandardRadioLegs - 1);
  EXPECT_TRUE(bed.core.has_authentication(ue->identity().cached_id));
  ASSERT_NE(bed.core.session(ue->identity().cached_id), nullptr);
  EXPECT_EQ(bed.core.nfs().load("amf-1"), 0);
  EXPECT_EQ(bed.core.nfs().load("ausf-1"), 0);
}

TEST(StandardRegistration, UnknownSuciIssuesNoKeys) {
  CoreBed bed;
  RandomSource rng(1, "attacker");
  ScriptedUe attacker("attacker", conceal_identity("imsi-x", "nowhere"), RootSecret{rng.bytes<32>()});
  std::optional<RegistrationResult> result;
  run_standard_registration(bed.ctx(), attacker, bed.request_for(attacker, kServing), 0,
                            [&](const RegistrationResult& r) { result = r; });
  bed.kernel.run_until(20'000);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->outcome, Outcome::subscriber_not_found);
  EXPECT_FALSE(result->network_keys);
  EXPECT_EQ(attacker.challenges, 0);
  EXPECT_FALSE(bed.residency.resident(HostClass::core_datacenter, KeyLevel::ausf));
}

TEST(StandardRegistration, WrongRootSecretIsMacFailure) {
  CoreBed bed;
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  RandomSource rng(9, "clone");
  ScriptedUe clone("clone", ue->identity(), RootSecret{rng.bytes<32>()});
  std::optional<RegistrationResult> result;
  run_standard_registration(bed.ctx(), clone, bed.request_for(clone, kServing), 0,
                            [&](const RegistrationResult& r) { result = r; });
  bed.kernel.run_until(20'000);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->outcome, Outcome::mac_failure);
  EXPECT_TRUE(bed.core.sessions().empty());
}

TEST(StandardRegistration, OutageBetweenChallengeAndResponseTimesOut) {
  BackhaulProfile p = healthy();
  p.outages = {{30, 20'000}};
  CoreBed bed(p);
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  std::optional<RegistrationResult> result;
  run_standard_registration(bed.ctx(), *ue, bed.request_for(*ue, kServing), 0,
                            [&](const RegistrationResult& r) { result = r; });
  bed.kernel.run_until(30'000);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->outcome, Outcome::timeout);
  EXPECT_EQ(result->finished_at, kDefaultRequestTimeout);
  EXPECT_EQ(ue->challenges, 1);
  EXPECT_TRUE(bed.core.sessions().empty());
  EXPECT_EQ(bed.core.nfs().load("amf-1"), 0);
}

TEST(StandardRegistration, DisallowedSliceIsPolicyDenied) {
  CoreBed bed;
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  std::optional<RegistrationResult> result;
  run_standard_registration(bed.ctx(), *ue, bed.request_for(*ue, kServing, "urllc"), 0,
                            [&](const RegistrationResult& r) { result = r; });
  bed.kernel.run_until(20'000);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->outcome, Outcome::policy_denied);
}

TEST(StandardRegistration, RoamerIsAuthenticatedByHomeNetwork) {
  CoreBed bed;
  auto ue = bed.provision(bed.home_db, "imsi-roam");
  const AccountId acct = bed.fabric.open_account("roam");
  std::optional<RegistrationResult> result;
  run_standard_registration(bed.ctx(), *ue, bed.request_for(*ue, "home-net"), acct,
                            [&](const RegistrationResult& r) { result = r; });
  bed.kernel.run_until(20'000);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->outcome, Outcome::success);
  EXPECT_EQ(bed.home_link.messages_sent(), 2u);
  EXPECT_EQ(bed.fabric.account(acct).messages, static_cast<std::uint64_t>(kStandardBackhaulMessages));
  EXPECT_TRUE(bed.residency.resident(HostClass::home_network, KeyLevel::root));
  EXPECT_FALSE(bed.residency.resident(HostClass::core_datacenter, KeyLevel::root));
}

TEST(Reauthentication, ThreeBackhaulMessages) {
  CoreBed bed;
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  run_standard_registration(bed.ctx(), *ue, bed.request_for(*ue, kServing), 0, [](const auto&) {});
  bed.kernel.run_until(1000);
  const AccountId acct = bed.fabric.open_account("reauth");
  std::optional<RegistrationResult> result;
  run_core_reauthentication(bed.ctx(), *ue, bed.request_for(*ue, kServing), acct,
                            [&](const RegistrationResult& r) { result = r; });
  bed.kernel.run_until(20'000);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->outcome, Outcome::success);
  EXPECT_EQ(bed.fabric.account(acct).messages, static_cast<std::uint64_t>(kReauthBackhaulMessages));
  EXPECT_EQ(result->network_keys->k_seaf, ue->current_keys()->k_seaf);
}

TEST(Reauthentication, DuringOutageTimesOut) {
  BackhaulProfile p = healthy();
  p.outages = {{5'000, 30'000}};
  CoreBed bed(p);
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  run_standard_registration(bed.ctx(), *ue, bed.request_for(*ue, kServing), 0, [](const auto&) {});
  bed.kernel.run_until(6'000);
  std::optional<RegistrationResult> result;
  run_core_reauthentication(bed.ctx(), *ue, bed.request_for(*ue, kServing), 0,
                            [&](const RegistrationResult& r) { result = r; });
  bed.kernel.run_until(20'000);
  ASSERT_TRUE(result);
  EXPECT_EQ(result->outcome, Outcome::timeout);
}

TEST(MonitorAndReauthenticate, TicksBeforeHorizon) {
  Kernel kernel(1);
  SessionRecord s;
  s.established_at = 0;
  std::vector<SimTime> fired;
  const auto ticks =
      monitor_and_reauthenticate(kernel, s, 60'000, 150'000, [&](SimTime t) { fired.push_back(t); });
  EXPECT_EQ(ticks, (std::vector<SimTime>{60'000, 120'000}));
  kernel.run_until(200'000);
  EXPECT_EQ(fired, ticks);
  EXPECT_THROW(monitor_and_reauthenticate(kernel, s, 0, 10, {}), Error);
}
