#include "ransim/harness/simulation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <memory>
#include <set>
#include <sstream>

#include "ransim/ue/ue_agent.hpp"
#include "ransim/ue/workload.hpp"

namespace ransim {

namespace {

constexpr SimTime kDrainSlack = 5000;
constexpr std::uint64_t kProbeBytes = 64;

std::string indexed_id(const std::string& population, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04zu", i);
  return population + "-" + buf;
}

struct UeSlot {
  std::unique_ptr<UeAgent> agent;
  const PopulationConfig* population = nullptr;
  int attempts = 0;
  std::uint64_t generation = 0;
};

struct PendingRow {
  std::size_t row;
  AccountId account;
  SimTime started;
  bool finished = false;
};

class Simulation {
 public:
  Simulation(const ScenarioConfig& config, std::uint64_t seed, RunOptions options)
      : config_(config),
        seed_(seed),
        options_(options),
        kernel_(seed),
        backhaul_(config.backhaul),
        home_link_(config.home_link),
        fabric_(kernel_, fabric_config(config), backhaul_, home_link_),
        core_(config.serving_network, AddressPool(0x0A000001, 1u << 16),
              config.design == Design::colocated ? HostClass::edge : HostClass::core_datacenter, &residency_),
        av_rng_(kernel_.seeded_random("av")),
        ctx_{kernel_, fabric_, core_, av_rng_, config.request_timeout_ms, "ran"},
        ric_(fabric_, ctx_, ric_config(config), &residency_) {
    core_.nfs().add(NfKind::amf, "amf-1");
    core_.nfs().add(NfKind::amf, "amf-2");
    core_.nfs().add(NfKind::ausf, "ausf-1");
    core_.nfs().add(NfKind::udm, "udm-1");
    core_.nfs().add(NfKind::smf, "smf-1");
    core_.nfs().add(NfKind::pcf, "pcf-1");
    core_.nfs().add(NfKind::upf, "upf-1");
    core_.nfs().add(NfKind::upf, "upf-2");
    reauth_account_ = fabric_.open_account("reauth");
  }

  MetricsReport run() {
    build_population();
    prewarm();
    const SimTime end = config_.horizon_ms + config_.request_timeout_ms + kDrainSlack;
    ric_.start(end);
    schedule_arrivals();
    kernel_.run_until(end);
    return report();
  }

 private:
  static FabricConfig fabric_config(const ScenarioConfig& c) {
    FabricConfig f;
    f.radio_latency = c.radio_latency_ms;
    f.core_hop_latency = c.core_hop_latency_ms;
    f.colocated = c.design == Design::colocated;
    f.default_message_bytes = c.default_message_bytes;
    f.message_bytes = c.message_bytes;
    f.message_bytes.try_emplace("Probe", kProbeBytes);
    f.message_bytes.try_emplace("ProbeAck", kProbeBytes);
    return f;
  }

  static RicConfig ric_config(const ScenarioConfig& c) {
    RicConfig r;
    r.design = c.design;
    r.dos_filter = c.dos_filter;
    r.dos = c.dos;
    r.assessment.probe_interval = c.probe_interval_ms;
    r.assessment.probe_timeout = c.probe_timeout_ms;
    r.assessment.utilization_window = c.utilization_window_ms;
    r.assessment.link_bandwidth = c.backhaul.bandwidth;
    r.bandwidth_threshold = c.bandwidth_fraction;
    r.probationary = c.probationary;
    r.delays = c.xapp_delays;
    r.capture_ttl = c.capture_ttl_ms;
    r.cache_capacity = c.cache_capacity;
    return r;
  }

  bool serving_home(const NetworkId& home) const { return home.empty() || home == config_.serving_network; }

  SubscriberDatabase& database(const NetworkId& home) {
    if (serving_home(home)) return core_.local_subscribers();
    auto [it, inserted] = partners_.try_emplace(home, home);
    if (inserted) core_.add_home_network(it->second);
    return it->second;
  }

  void build_population() {
    residency_.record(config_.design == Design::colocated ? HostClass::edge : HostClass::core_datacenter,
                      KeyLevel::root);
    for (const auto& pop : config_.populations) {
      RandomSource keys = kernel_.seeded_random("keys:" + pop.name);
      for (std::size_t i = 0; i < pop.count; ++i) {
        const std::string ue_id = indexed_id(pop.name, i);
        UeProfile profile;
        if (pop.behavior == Behavior::attacker_flood) {
          profile = make_attacker(ue_id, pop.name, config_.serving_network, keys);
        } else {
          const NetworkId home = serving_home(pop.home_network) ? config_.serving_network : pop.home_network;
          SubscriberRecord rec;
          rec.supi = "imsi-" + home + "-" + ue_id;
          rec.root_secret = RootSecret{keys.bytes<32>()};
          rec.subscription = pop.subscription;
          rec.home_network = home;
          profile.ue_id = ue_id;
          profile.population = pop.name;
          if (pop.provisioned) {
            SubscriberDatabase& db = database(home);
            if (!serving_home(home)) residency_.record(HostClass::home_network, KeyLevel::root);
            profile.identity = db.provision(rec);
          } else {
            profile.identity = conceal_identity(rec.supi, home);
          }
          profile.usim = UsimState{rec.root_secret, 0, 1, {}};
          profile.behavior = pop.behavior;
          profile.express_eligible = pop.express_eligible;
          profile.home_network = home;
          profile.slice = pop.slice;
          profile.service = pop.service;
          profile.period_ms = pop.period_ms;
          profile.hold_ms = pop.hold_ms;
        }
        UeSlot slot;
        slot.agent = std::make_unique<UeAgent>(std::move(profile));
        slot.population = &pop;
        if (pop.express_eligible) ric_.mark_express_eligible(slot.agent->identity().cached_id);
        by_id_[slot.agent->identity().cached_id] = ue_id;
        slots_.push_back(std::move(slot));
      }
    }
  }

  /// A prior authentication before t = 0, then the cache pushes the design
  /// supports.
  void prewarm() {
    std::set<std::size_t> authenticated;
    RandomSource rng = kernel_.seeded_random("prewarm");
    for (const auto& w : config_.prewarm) {
      for (std::size_t i = 0; i < slots_.size(); ++i) {
        UeSlot& slot = slots_[i];
        if (slot.population->name != w.population) continue;
        UeAgent& ue = *slot.agent;
        const UeIdentity& id = ue.identity();
        SubscriberDatabase& db = database(ue.profile().home_network);
        if (authenticated.insert(i).second) {
          auto issued = db.generate_av(id.suci, config_.serving_network, rng);
          if (!issued) throw Error(ErrorCode::validation_error, "prewarm: " + ue.profile().ue_id + " is not provisioned");
          const auto answer = ue.on_auth_challenge(issued->av.rand, issued->av.autn, config_.serving_network);
          if (!answer.ok()) throw Error(ErrorCode::validation_error, "prewarm: challenge rejected");
          keys_[i] = expand_hierarchy(issued->av.k_derived, config_.serving_network, id);
          subscriptions_[i] = issued->subscription;
          core_.record_authentication(id.cached_id, 0);
          const HostClass host = core_.host();
          residency_.record(host, KeyLevel::ausf);
          residency_.record(host, KeyLevel::seaf);
          residency_.record(host, KeyLevel::amf);
        }
        const KSeaf& k = keys_.at(i).k_seaf;
        const SubscriptionPolicy& policy = subscriptions_.at(i);
        const bool decision = w.kind != PrewarmKind::state;
        const bool state = w.kind != PrewarmKind::decision;
        if (decision && uses_ric(config_.design)) {
          ric_.store_decision(make_decision_entry(id.cached_id, k, policy, ue.profile().slice, w.ttl_ms, 0));
        }
        if (state && config_.design == Design::logic_replication) {
          ric_.store_state(make_state_entry(id.cached_id, k, policy, ue.profile().slice, w.ttl_ms, 0));
        }
      }
    }
  }

  void schedule_arrivals() {
    std::size_t next = 0;
    for (const auto& pop : config_.populations) {
      RandomSource rng = kernel_.seeded_random("arrivals:" + pop.name);
      const auto first = arrival_times(pop.arrival, pop.count, rng);
      for (std::size_t i = 0; i < pop.count; ++i, ++next) {
        const std::size_t slot = next;
        run_behavior(kernel_, slots_[slot].agent->profile(), first[i], config_.horizon_ms,
                     [this, slot](SimTime t) { attempt(slot, t); });
      }
    }
  }

  void attempt(std::size_t slot_index, SimTime started) {
    UeSlot& slot = slots_[slot_index];
    UeAgent& ue = *slot.agent;
    const int k = ++slot.attempts;
    const AccountId account = fabric_.open_account(ue.profile().ue_id + "#" + std::to_string(k));
    MetricsRow row;
    row.scenario = config_.name;
    row.design = std::string(to_string(config_.design));
    row.seed = seed_;
    row.ue_id = ue.profile().ue_id;
    row.cohort = slot.population->name;
    rows_.push_back(std::move(row));
    const std::size_t pending = pending_.size();
    pending_.push_back(PendingRow{rows_.size() - 1, account, started});

    fabric_.send(Hop::radio, ue.endpoint(), "ran", "RegistrationRequest", account,
                 [this, slot_index, account, pending] {
      UeAgent& agent = *slots_[slot_index].agent;
      ric_.handle_registration(agent, agent.registration_request(config_.serving_network), account,
                               [this, slot_index, pending](const AttemptResult& r) {
        PendingRow& p = pending_[pending];
        if (p.finished) return;
        p.finished = true;
        MetricsRow& row = rows_[p.row];
        row.outcome = r.outcome;
        row.path = r.path;
        row.latency_ms = r.finished_at - p.started;
        if (r.outcome == Outcome::success) on_connected(slot_index);
      });
    });
  }

  void on_connected(std::size_t slot_index) {
    UeSlot& slot = slots_[slot_index];
    const std::uint64_t generation = ++slot.generation;
    const UeProfile& profile = slot.agent->profile();
    if (profile.behavior == Behavior::periodic_sensor && profile.hold_ms > 0) {
      kernel_.schedule(profile.hold_ms, profile.ue_id, "Disconnect", [this, slot_index, generation] {
        UeSlot& s = slots_[slot_index];
        if (s.generation != generation) return;
        ++s.generation;
        ric_.release(s.agent->identity().cached_id);
      });
    }
    schedule_reauth(slot_index, generation);
  }

  void schedule_reauth(std::size_t slot_index, std::uint64_t generation) {
    const SimTime at = kernel_.now() + config_.reauth_interval_ms;
    if (at >= config_.horizon_ms) return;
    const std::string& who = slots_[slot_index].agent->profile().ue_id;
    kernel_.schedule_at(at, who, "ReauthTick", [this, slot_index, generation] {
      UeSlot& s = slots_[slot_index];
      if (s.generation != generation) return;
      UeAgent& agent = *s.agent;
      ric_.handle_reauthentication(agent, agent.registration_request(config_.serving_network), reauth_account_,
                                   [this, slot_index, generation](bool ok) {
        UeSlot& s2 = slots_[slot_index];
        if (s2.generation != generation) return;
        if (ok) {
          schedule_reauth(slot_index, generation);
        } else {
          ++s2.generation;
        }
      });
    });
  }

  MetricsReport report() {
    for (const PendingRow& p : pending_) {
      MetricsRow& row = rows_[p.row];
      const AccountTotals& totals = fabric_.account(p.account);
      row.backhaul_msgs = totals.messages;
      row.backhaul_bytes = totals.bytes;
      if (!p.finished) {
        row.outcome = Outcome::timeout;
        row.latency_ms = config_.request_timeout_ms;
      }
    }

    MetricsReport r;
    r.scenario = config_.name;
    r.design = config_.design;
    r.seed = seed_;
    r.rows = std::move(rows_);
    r.aggregates = compute_aggregates(r.rows, residency_.flags());
    r.link_bytes = backhaul_.bytes_sent() + home_link_.bytes_sent();
    r.link_messages = backhaul_.messages_sent() + home_link_.messages_sent();
    for (const AccountId id : background_accounts()) {
      const AccountTotals& t = fabric_.account(id);
      r.background_bytes[t.label] = t.bytes;
    }
    r.residency = residency_.entries();
    r.access_log = ric_.access_log();

    const SimTime now = kernel_.now();
    for (const DecisionCacheEntry& e : ric_.decision_cache().live_entries(now)) {
      r.decision_cached.push_back(by_id_.at(e.ue_cached_id));
    }
    for (const StateCacheEntry& e : ric_.state_cache().live_entries(now)) {
      r.state_cached.push_back(by_id_.at(e.key()));
    }
    std::sort(r.decision_cached.begin(), r.decision_cached.end());
    std::sort(r.state_cached.begin(), r.state_cached.end());

    if (options_.trace) {
      std::ostringstream out;
      fabric_.write_trace(out);
      r.trace = out.str();
    }
    if (options_.snapshot) {
      std::ostringstream out;
      ric_.write_snapshot(out, now);
      r.snapshot = out.str();
    }
    return r;
  }

  std::vector<AccountId> background_accounts() const {
    std::set<AccountId> attempt_accounts;
    for (const PendingRow& p : pending_) attempt_accounts.insert(p.account);
    std::vector<AccountId> out;
    for (AccountId id = 1; id < fabric_.accounts().size(); ++id) {
      if (!attempt_accounts.contains(id)) out.push_back(id);
    }
    return out;
  }

  const ScenarioConfig& config_;
  std::uint64_t seed_;
  RunOptions options_;
  Kernel kernel_;
  BackhaulLink backhaul_;
  BackhaulLink home_link_;
  Fabric fabric_;
  KeyResidencyLog residency_;
  CoreNetwork core_;
  std::map<NetworkId, SubscriberDatabase> partners_;
  RandomSource av_rng_;
  CoreContext ctx_;
  Ric ric_;
  AccountId reauth_account_ = 0;

  std::vector<UeSlot> slots_;
  std::map<CachedId, std::string> by_id_;
  std::map<std::size_t, KeyHierarchy> keys_;
  std::map<std::size_t, SubscriptionPolicy> subscriptions_;
  std::vector<MetricsRow> rows_;
  std::vector<PendingRow> pending_;
};

}  // namespace

MetricsReport run_scenario(const ScenarioConfig& config, std::optional<std::uint64_t> seed, RunOptions options) {
  config.validate();
  Simulation sim(config, seed.value_or(config.seed), options);
  return sim.run();
}

std::vector<MetricsReport> compare_designs(const ScenarioConfig& config, std::optional<std::uint64_t> seed) {
  config.validate();
  std::vector<std::future<MetricsReport>> runs;
  for (Design d : kAllDesigns) {
    ScenarioConfig variant = config;
    variant.design = d;
    runs.push_back(std::async(std::launch::async, [variant = std::move(variant), seed] {
      return run_scenario(variant, seed);
    }));
  }
  std::vector<MetricsReport> reports;
  for (auto& f : runs) reports.push_back(f.get());
  return reports;
}

void write_comparison_dir(const std::filesystem::path& dir, const std::vector<MetricsReport>& reports) {
  std::filesystem::create_directories(dir);
  for (const auto& r : reports) {
    std::ofstream out(dir / (std::string(to_string(r.design)) + ".csv"));
    write_csv(out, r.rows);
  }
  std::ofstream out(dir / "comparison.csv");
  write_comparison(out, reports);
}

}  // namespace ransim
