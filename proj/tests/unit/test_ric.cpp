#include <gtest/gtest.h>

#include <algorithm>

#include "support/ric_bed.hpp"

using namespace ransim;
using namespace ransim::test_support;

namespace {

std::vector<std::string> events_for(const Ric& ric, const std::string& ue) {
  std::vector<std::string> out;
  for (const auto& e : ric.access_log()) {
    if (e.ue == ue) out.push_back(e.event);
  }
  return out;
}

const AccessLogEntry* find_event(const Ric& ric, const std::string& ue, const std::string& event) {
  for (const auto& e : ric.access_log()) {
    if (e.ue == ue && e.event == event) return &e;
  }
  return nullptr;
}

/// Endpoint that answers every local challenge with a fixed proof.
class ReplayingUe : public UeEndpoint {
 public:
  ReplayingUe(std::string name, UeIdentity id, Digest proof)
      : name_(std::move(name)), id_(std::move(id)), proof_(proof) {}

  const UeIdentity& identity() const override { return id_; }
  const std::string& endpoint() const override { return name_; }
  ChallengeResult on_auth_challenge(const Nonce128&, const AuthToken&, std::string_view) override { return {}; }
  std::optional<Digest> on_local_challenge(std::uint64_t) override { return proof_; }
  std::optional<KeyHierarchy> current_keys() const override { return std::nullopt; }

 private:
  std::string name_;
  UeIdentity id_;
  Digest proof_;
};

/// Wraps a real UE and records the local challenge transcript.
class RecordingUe : public UeEndpoint {
 public:
  explicit RecordingUe(UeEndpoint& inner) : inner_(inner) {}

  const UeIdentity& identity() const override { return inner_.identity(); }
  const std::string& endpoint() const override { return inner_.endpoint(); }
  ChallengeResult on_auth_challenge(const Nonce128& r, const AuthToken& a, std::string_view s) override {
    return inner_.on_auth_challenge(r, a, s);
  }
  std::optional<Digest> on_local_challenge(std::uint64_t nonce) override {
    auto proof = inner_.on_local_challenge(nonce);
    nonce_ = nonce;
    proof_ = proof;
    return proof;
  }
  std::optional<KeyHierarchy> current_keys() const override { return inner_.current_keys(); }

  std::uint64_t nonce_ = 0;
  std::optional<Digest> proof_;

 private:
  UeEndpoint& inner_;
};

}  // namespace

TEST(Ric, XAppsPerDesign) {
  EXPECT_EQ(RicBed(Design::baseline).ric.xapps().size(), 0u);
  EXPECT_EQ(RicBed(Design::colocated).ric.xapps().size(), 0u);
  RicBed dc(Design::decision_cache);
  EXPECT_TRUE(dc.ric.xapps().has(xapp::kTriage));
  EXPECT_TRUE(dc.ric.xapps().has(xapp::kExpress));
  EXPECT_FALSE(dc.ric.xapps().has(xapp::kAuthProxy));
  EXPECT_EQ(RicBed(Design::logic_replication).ric.xapps().size(), 7u);
}

TEST(Ric, ExpressDuringTotalOutageUsesNoBackhaul) {
  RicBed bed(Design::decision_cache, outage_backhaul(0, 1'000'000));
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  bed.prewarm_decision(*ue, bed.prior_auth(*ue, bed.core.local_subscribers()));
  const auto a = bed.register_at(100, *ue, RicBed::request_for(*ue, kServing));
  bed.kernel.run_until(20'000);
  ASSERT_TRUE(a.result->has_value());
  EXPECT_EQ((*a.result)->outcome, Outcome::success);
  EXPECT_EQ((*a.result)->path, RoutingDecision::express);
  // radio up, triage, express, challenge down and up, accept down
  EXPECT_EQ((*a.result)->finished_at - a.started, 4 * 5 + 10 + 10);
  EXPECT_EQ(bed.backhaul_messages(a), 0u);
  EXPECT_EQ(bed.fabric.account(a.account).bytes, 0u);
  EXPECT_EQ(bed.ric.local_sessions().size(), 1u);
}

TEST(Ric, ExpressWithoutKeysFailsChallenge) {
  RicBed bed(Design::decision_cache, outage_backhaul(0, 1'000'000));
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  const KeyHierarchy keys = bed.prior_auth(*ue, bed.core.local_subscribers());
  bed.prewarm_decision(*ue, keys);
  ScriptedUe impostor("impostor", ue->identity(), RootSecret{});
  const auto a = bed.register_at(100, impostor, RicBed::request_for(impostor, kServing));
  bed.kernel.run_until(20'000);
  EXPECT_EQ((*a.result)->outcome, Outcome::challenge_failed);
  EXPECT_TRUE(bed.ric.local_sessions().empty());
}

TEST(Ric, ReplayedExpressTranscriptIsRejected) {
  RicBed bed(Design::decision_cache, outage_backhaul(0, 1'000'000));
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  bed.prewarm_decision(*ue, bed.prior_auth(*ue, bed.core.local_subscribers()));
  RecordingUe recorder(*ue);
  const auto legit = bed.register_at(100, recorder, RicBed::request_for(recorder, kServing));
  bed.kernel.run_until(1000);
  ASSERT_EQ((*legit.result)->outcome, Outcome::success);
  ASSERT_TRUE(recorder.proof_);

  ReplayingUe replayer("replayer", ue->identity(), *recorder.proof_);
  const auto replay = bed.register_at(2000, replayer, RicBed::request_for(replayer, kServing));
  bed.kernel.run_until(5000);
  EXPECT_EQ((*replay.result)->outcome, Outcome::challenge_failed);
}

TEST(Ric, StandardWhenNotCached) {
  RicBed bed(Design::decision_cache);
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  const auto a = bed.register_at(0, *ue, RicBed::request_for(*ue, kServing));
  bed.kernel.run_until(20'000);
  EXPECT_EQ((*a.result)->outcome, Outcome::success);
  EXPECT_EQ((*a.result)->path, RoutingDecision::standard);
  EXPECT_EQ(bed.backhaul_messages(a), static_cast<std::uint64_t>(kStandardBackhaulMessages));
  // not express eligible: nothing captured
  EXPECT_EQ(bed.ric.decision_cache().size(), 0u);
}

TEST(Ric, StandardSuccessCapturesStateInLogicReplication) {
  RicBed bed(Design::logic_replication);
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  bed.ric.mark_express_eligible(ue->identity().cached_id);
  bed.ric.start(30'000);
  const auto a = bed.register_at(100, *ue, RicBed::request_for(*ue, kServing));
  bed.kernel.run_until(20'000);
  EXPECT_EQ((*a.result)->path, RoutingDecision::standard);
  EXPECT_TRUE(bed.ric.state_cache().live(ue->identity().cached_id, bed.kernel.now()));
  EXPECT_TRUE(bed.ric.decision_cache().live(ue->identity().cached_id, bed.kernel.now()));
}

TEST(Ric, DelegatedGrantDuringOutage) {
  RicBed bed(Design::logic_replication, outage_backhaul(0, 1'000'000));
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  bed.prewarm_state(*ue, bed.prior_auth(*ue, bed.core.local_subscribers()));
  bed.ric.start(30'000);
  const auto a = bed.register_at(5000, *ue, RicBed::request_for(*ue, kServing));
  bed.kernel.run_until(30'000);
  EXPECT_EQ((*a.result)->outcome, Outcome::success);
  EXPECT_EQ((*a.result)->path, RoutingDecision::delegated);
  EXPECT_EQ(bed.backhaul_messages(a), 0u);
  EXPECT_TRUE(bed.residency.resident(HostClass::edge, KeyLevel::seaf));
  EXPECT_FALSE(bed.residency.resident(HostClass::edge, KeyLevel::root));
  EXPECT_FALSE(bed.residency.resident(HostClass::edge, KeyLevel::ausf));
}

TEST(Ric, DelegatedPolicyDenied) {
  RicBed bed(Design::logic_replication, outage_backhaul(0, 1'000'000));
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  SubscriptionPolicy narrow;
  narrow.allowed_slices = {"embb"};
  narrow.authorized_services = {"messaging"};
  bed.prewarm_state(*ue, bed.prior_auth(*ue, bed.core.local_subscribers()), narrow);
  bed.ric.start(30'000);
  const auto a = bed.register_at(5000, *ue, RicBed::request_for(*ue, kServing, "video"));
  bed.kernel.run_until(30'000);
  EXPECT_EQ((*a.result)->outcome, Outcome::policy_denied);
  EXPECT_EQ((*a.result)->path, RoutingDecision::delegated);
  EXPECT_NE(find_event(bed.ric, ue->endpoint(), "delegated-denied"), nullptr);
}

TEST(Ric, UnknownLocalDuringOutageIsRejected) {
  RicBed bed(Design::logic_replication, outage_backhaul(0, 1'000'000));
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  bed.ric.start(30'000);
  const auto a = bed.register_at(5000, *ue, RicBed::request_for(*ue, kServing));
  bed.kernel.run_until(30'000);
  EXPECT_EQ((*a.result)->outcome, Outcome::rejected);
  EXPECT_EQ((*a.result)->path, RoutingDecision::reject);
}

TEST(Ric, ProbationaryRoamerMigratesAfterRecovery) {
  RicBed bed(Design::logic_replication, outage_backhaul(0, 20'000));
  SubscriptionPolicy full;
  full.allowed_slices = {"embb"};
  full.authorized_services = {"web", "voice", "messaging"};
  auto ue = bed.provision(bed.home_db, "imsi-roamer", full);
  bed.ric.start(60'000);
  const auto a = bed.register_at(5000, *ue, RicBed::request_for(*ue, kHome));
  bed.kernel.run_until(60'000);

  EXPECT_EQ((*a.result)->outcome, Outcome::success);
  EXPECT_EQ((*a.result)->path, RoutingDecision::probationary);
  EXPECT_EQ(bed.backhaul_messages(a), 0u);

  const std::vector<std::string> expected{"probationary-admit", "deferred-auth-queued", "deferred-auth-started",
                                          "deferred-auth-success", "migrated", "state-cached"};
  EXPECT_EQ(events_for(bed.ric, ue->endpoint()), expected);
  EXPECT_EQ(find_event(bed.ric, ue->endpoint(), "probationary-admit")->detail,
            "slice=probation services=messaging");
  EXPECT_EQ(find_event(bed.ric, ue->endpoint(), "migrated")->detail, "slice=embb services=messaging,voice,web");
  EXPECT_GE(find_event(bed.ric, ue->endpoint(), "deferred-auth-started")->time, 20'000);

  const auto& session = bed.ric.local_sessions().at(ue->identity().cached_id);
  EXPECT_EQ(session.slice, "embb");
  EXPECT_FALSE(session.probationary);
  EXPECT_TRUE(bed.ric.state_cache().live(ue->identity().cached_id, bed.kernel.now()));
  EXPECT_EQ(bed.ric.deferred_pending(), 0u);
}

TEST(Ric, DeferredAuthFailureBlacklists) {
  RicBed bed(Design::logic_replication, outage_backhaul(0, 20'000));
  // claims the partner network but is not provisioned there
  ScriptedUe ue("ue-ghost", conceal_identity("imsi-ghost", kHome), RootSecret{});
  bed.ric.start(60'000);
  const auto a = bed.register_at(5000, ue, RicBed::request_for(ue, kHome));
  bed.kernel.run_until(60'000);
  EXPECT_EQ((*a.result)->path, RoutingDecision::probationary);
  const std::vector<std::string> expected{"probationary-admit", "deferred-auth-queued", "deferred-auth-started",
                                          "deferred-auth-failed", "terminated", "blacklisted"};
  EXPECT_EQ(events_for(bed.ric, ue.endpoint()), expected);
  EXPECT_TRUE(bed.ric.local_sessions().empty());
  EXPECT_TRUE(bed.ric.blacklist().contains(ue.identity().cached_id));

  const auto again = bed.register_at(61'000, ue, RicBed::request_for(ue, kHome));
  bed.kernel.run_until(70'000);
  EXPECT_EQ((*again.result)->outcome, Outcome::rejected);
}

TEST(Ric, FilterDropsFloodWithoutBackhaul) {
  RicBed bed(Design::decision_cache);
  std::vector<std::unique_ptr<ScriptedUe>> flood;
  std::vector<Attempt> attempts;
  for (int i = 0; i < 60; ++i) {
    flood.push_back(std::make_unique<ScriptedUe>("att-" + std::to_string(i),
                                                 conceal_identity("imsi-att-" + std::to_string(i), kServing),
                                                 RootSecret{}));
    attempts.push_back(bed.register_at(1000, *flood.back(), RicBed::request_for(*flood.back(), kServing)));
  }
  bed.kernel.run_until(30'000);
  int filtered = 0;
  for (const auto& a : attempts) {
    if ((*a.result)->outcome == Outcome::filtered) {
      ++filtered;
      EXPECT_EQ(bed.backhaul_messages(a), 0u);
      EXPECT_EQ((*a.result)->path, RoutingDecision::reject);
    } else {
      EXPECT_EQ((*a.result)->outcome, Outcome::subscriber_not_found);
    }
  }
  EXPECT_EQ(filtered, 10);
}

TEST(Ric, LocalReauthenticationWithoutBackhaul) {
  RicBed bed(Design::decision_cache, outage_backhaul(0, 1'000'000));
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  bed.prewarm_decision(*ue, bed.prior_auth(*ue, bed.core.local_subscribers()));
  bed.register_at(100, *ue, RicBed::request_for(*ue, kServing));
  bed.kernel.run_until(1000);
  const AccountId account = bed.fabric.open_account("reauth");
  std::optional<bool> ok;
  bed.ric.handle_reauthentication(*ue, RicBed::request_for(*ue, kServing), account, [&](bool r) { ok = r; });
  bed.kernel.run_until(2000);
  EXPECT_EQ(ok, true);
  EXPECT_EQ(bed.fabric.account(account).messages, 0u);
}

TEST(Ric, CoreReauthenticationFailureReleasesSession) {
  RicBed bed(Design::baseline, outage_backhaul(5000, 1'000'000));
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  const auto a = bed.register_at(0, *ue, RicBed::request_for(*ue, kServing));
  bed.kernel.run_until(1000);
  ASSERT_EQ((*a.result)->outcome, Outcome::success);
  ASSERT_NE(bed.core.session(ue->identity().cached_id), nullptr);
  bed.kernel.run_until(6000);
  const AccountId account = bed.fabric.open_account("reauth");
  std::optional<bool> ok;
  bed.ric.handle_reauthentication(*ue, RicBed::request_for(*ue, kServing), account, [&](bool r) { ok = r; });
  bed.kernel.run_until(30'000);
  EXPECT_EQ(ok, false);
  EXPECT_EQ(bed.core.session(ue->identity().cached_id), nullptr);
}

TEST(Ric, SnapshotListsLiveEntries) {
  RicBed bed(Design::logic_replication);
  auto ue = bed.provision(bed.core.local_subscribers(), "imsi-1");
  const KeyHierarchy keys = bed.prior_auth(*ue, bed.core.local_subscribers());
  bed.prewarm_decision(*ue, keys, 1000);
  bed.prewarm_state(*ue, keys);
  std::ostringstream out;
  bed.ric.write_snapshot(out, 0);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_NE(text.find(fingerprint(keys.k_seaf)), std::string::npos);
  std::ostringstream later;
  bed.ric.write_snapshot(later, 1000);
  EXPECT_EQ(later.str().rfind("state,", 0), 0u);
}
