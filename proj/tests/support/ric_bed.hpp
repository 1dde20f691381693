#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ransim/core/core_network.hpp"
#include "ransim/core/procedures.hpp"
#include "ransim/ran/ric.hpp"
#include "support/test_ue.hpp"

namespace ransim::test_support {

inline constexpr const char* kServing = "serving-net";
inline constexpr const char* kHome = "home-net";

inline BackhaulProfile healthy_backhaul(SimTime latency = 10) {
  BackhaulProfile p;
  p.base_latency = latency;
  p.bandwidth = 1'250'000;
  return p;
}

inline BackhaulProfile outage_backhaul(SimTime start, SimTime end) {
  BackhaulProfile p = healthy_backhaul();
  p.outages = {OutageInterval{start, end}};
  return p;
}

inline SubscriptionPolicy default_subscription() {
  SubscriptionPolicy s;
  s.allowed_slices = {"embb"};
  s.authorized_services = {"web", "messaging", "voice"};
  return s;
}

struct Attempt {
  AccountId account = 0;
  SimTime started = 0;
  std::shared_ptr<std::optional<AttemptResult>> result = std::make_shared<std::optional<AttemptResult>>();
};

/// One RAN, one serving core and one partner home network.
struct RicBed {
  explicit RicBed(Design design, BackhaulProfile backhaul_profile = healthy_backhaul(), std::uint64_t seed = 7,
                  RicConfig config = {})
      : kernel(seed),
        backhaul(std::move(backhaul_profile)),
        home_link(healthy_backhaul(20)),
        fabric(kernel, fabric_config(design), backhaul, home_link),
        core(kServing, AddressPool(0x0A000001, 1024),
             design == Design::colocated ? HostClass::edge : HostClass::core_datacenter, &residency),
        av_rng(kernel.seeded_random("av")),
        home_db(kHome),
        ric(fabric, CoreContext{kernel, fabric, core, av_rng}, with_design(std::move(config), design, backhaul),
            &residency) {
    core.nfs().add(NfKind::amf, "amf-1");
    core.nfs().add(NfKind::ausf, "ausf-1");
    core.nfs().add(NfKind::smf, "smf-1");
    core.nfs().add(NfKind::upf, "upf-1");
    core.add_home_network(home_db);
  }

  static FabricConfig fabric_config(Design design) {
    FabricConfig f;
    f.colocated = design == Design::colocated;
    f.message_bytes = {{"Probe", 64}, {"ProbeAck", 64}};
    return f;
  }

  static RicConfig with_design(RicConfig c, Design design, const BackhaulLink& link) {
    c.design = design;
    c.assessment.link_bandwidth = link.profile().bandwidth;
    return c;
  }

  std::unique_ptr<ScriptedUe> provision(SubscriberDatabase& db, const std::string& supi,
                                        SubscriptionPolicy subscription = default_subscription()) {
    RandomSource rng(kernel.seed(), "k-" + supi);
    SubscriberRecord rec;
    rec.supi = supi;
    rec.root_secret = RootSecret{rng.bytes<32>()};
    rec.subscription = std::move(subscription);
    const UeIdentity& id = db.provision(rec);
    return std::make_unique<ScriptedUe>("ue-" + supi, id, rec.root_secret);
  }

  /// Authentication that happened before the run; both sides keep keys.
  KeyHierarchy prior_auth(ScriptedUe& ue, SubscriberDatabase& db) {
    RandomSource rng(kernel.seed(), "prior-" + ue.identity().supi);
    auto issued = db.generate_av(ue.identity().suci, kServing, rng);
    ue.on_auth_challenge(issued->av.rand, issued->av.autn, kServing);
    return expand_hierarchy(issued->av.k_derived, kServing, ue.identity());
  }

  void prewarm_decision(ScriptedUe& ue, const KeyHierarchy& keys, SimTime ttl = 3'600'000) {
    ric.mark_express_eligible(ue.identity().cached_id);
    ric.store_decision(make_decision_entry(ue.identity().cached_id, keys.k_seaf, default_subscription(), "embb",
                                           ttl, kernel.now()));
  }

  void prewarm_state(ScriptedUe& ue, const KeyHierarchy& keys, SubscriptionPolicy policy = default_subscription(),
                     SimTime ttl = 3'600'000) {
    ric.store_state(make_state_entry(ue.identity().cached_id, keys.k_seaf, policy, "embb", ttl, kernel.now()));
  }

  static RegistrationRequest request_for(const UeEndpoint& ue, const std::string& home, std::string service = "web",
                                         SliceId slice = "embb") {
    return RegistrationRequest{ue.endpoint(), ue.identity().cached_id, ue.identity().suci, home, slice,
                               std::move(service), QosClass::best_effort};
  }

  /// UE sends RegistrationRequest over the radio at `at`.
  Attempt register_at(SimTime at, UeEndpoint& ue, RegistrationRequest request) {
    Attempt a;
    a.account = fabric.open_account(request.ue_id);
    a.started = at;
    kernel.schedule_at(at, ue.endpoint(), "attempt", [this, &ue, request, a] {
      fabric.send(Hop::radio, ue.endpoint(), "ran", "RegistrationRequest", a.account, [this, &ue, request, a] {
        ric.handle_registration(ue, request, a.account, [a](const AttemptResult& r) { *a.result = r; });
      });
    });
    return a;
  }

  std::uint64_t backhaul_messages(const Attempt& a) const { return fabric.account(a.account).messages; }

  Kernel kernel;
  BackhaulLink backhaul;
  BackhaulLink home_link;
  Fabric fabric;
  KeyResidencyLog residency;
  CoreNetwork core;
  RandomSource av_rng;
  SubscriberDatabase home_db;
  Ric ric;
};

}  // namespace ransim::test_support
