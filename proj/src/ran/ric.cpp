#include "ransim/ran/ric.hpp"

#include <ostream>

namespace ransim {

std::string_view to_string(Design design) noexcept {
  switch (design) {
    case Design::baseline: return "baseline";
    case Design::colocated: return "colocated";
    case Design::decision_cache: return "decision-cache";
    case Design::logic_replication: return "logic-replication";
  }
  return "?";
}

std::optional<Design> parse_design(std::string_view name) {
  for (Design d : {Design::baseline, Design::colocated, Design::decision_cache, Design::logic_replication}) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

namespace {

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

}  // namespace

struct Ric::Attempt {
  UeEndpoint* ue;
  RegistrationRequest request;
  AccountId account;
  AttemptCallback done;
  bool finished = false;
};

Ric::Ric(Fabric& fabric, CoreContext core, RicConfig config, KeyResidencyLog* residency)
    : fabric_(fabric),
      kernel_(fabric.kernel()),
      core_(std::move(core)),
      config_(std::move(config)),
      residency_(residency),
      filter_(config_.dos),
      decisions_(config_.cache_capacity),
      states_(config_.cache_capacity),
      ran_pool_(config_.ran_pool_base, config_.ran_pool_size) {
  const auto& d = config_.delays;
  const std::set<RequestType> reg{RequestType::registration};
  const std::set<RequestType> reauth{RequestType::reauthentication};
  if (uses_ric(config_.design)) {
    xapps_.register_xapp({xapp::kTriage, reg, d.triage});
    xapps_.register_xapp({xapp::kExpress, reg, d.express});
    xapps_.register_xapp({xapp::kMonitor, reauth, d.monitor});
  }
  if (config_.design == Design::logic_replication) {
    xapps_.register_xapp({xapp::kAuthProxy, {RequestType::registration, RequestType::reauthentication},
                          d.auth_proxy});
    xapps_.register_xapp({xapp::kPolicyProxy, {RequestType::registration, RequestType::session},
                          d.policy_proxy});
    xapps_.register_xapp({xapp::kSessionProxy, {RequestType::session}, d.session_proxy});
    if (config_.probationary.enabled) xapps_.register_xapp({xapp::kProbationary, reg, d.probationary});
    probe_account_ = fabric_.open_account("probes");
    deferred_account_ = fabric_.open_account("deferred-auth");
  }
}

void Ric::start(SimTime until) {
  if (config_.design != Design::logic_replication) return;
  probes_ = std::make_unique<ProbeMonitor>(fabric_, config_.assessment, probe_account_);
  probes_->on_resolved([this](const ProbeSample& s) {
    if (s.rtt && !deferred_.empty()) start_deferred();
  });
  probes_->start(until);
}

BackhaulHealth Ric::health(SimTime now) {
  if (!health_ || now - health_->assessed_at >= config_.assessment.probe_interval) {
    static const std::vector<ProbeSample> none;
    const auto& history = probes_ ? probes_->history() : none;
    const auto util = fabric_.backhaul().utilization(config_.assessment.utilization_window, now);
    health_ = assess_backhaul(history, util, config_.assessment, now);
  }
  return *health_;
}

void Ric::store_decision(DecisionCacheEntry entry) {
  if (residency_) residency_->record(HostClass::edge, KeyLevel::seaf);
  decisions_.store(std::move(entry));
}

void Ric::store_state(StateCacheEntry entry) {
  if (residency_) residency_->record(HostClass::edge, KeyLevel::seaf);
  states_.store(std::move(entry));
}

bool Ric::known(const CachedId& ue, SimTime now) const {
  return decisions_.live(ue, now) || states_.live(ue, now);
}

void Ric::log(const std::string& ue, std::string event, std::string detail) {
  log_.push_back(AccessLogEntry{kernel_.now(), ue, std::move(event), std::move(detail)});
}

void Ric::handle_registration(UeEndpoint& ue, RegistrationRequest request, AccountId account,
                              AttemptCallback done) {
  auto a = std::make_shared<Attempt>(Attempt{&ue, std::move(request), account, std::move(done)});
  if (!uses_ric(config_.design)) {
    run_standard(a);
    return;
  }
  xapps_.dispatch(kernel_, xapp::kTriage, [this, a] { triage(a); });
}

void Ric::triage(const std::shared_ptr<Attempt>& a) {
  const SimTime now = kernel_.now();
  const CachedId& id = a->request.cached_id;
  if (config_.dos_filter && filter_.check(id, known(id, now), now) == FilterVerdict::drop) {
    finish(a, Outcome::filtered, RoutingDecision::reject);
    return;
  }
  route(a);
}

void Ric::route(const std::shared_ptr<Attempt>& a) {
  const SimTime now = kernel_.now();
  const CachedId& id = a->request.cached_id;
  const bool replication = config_.design == Design::logic_replication;

  RoutingInputs in;
  in.blacklisted = blacklist_.contains(id);
  in.express_eligible = eligible_.contains(id);
  in.live_decision_entry = decisions_.lookup(id, RequestType::registration, now).hit();
  in.logic_replication = replication;
  in.link_bandwidth = config_.assessment.link_bandwidth;
  in.bandwidth_threshold = config_.bandwidth_threshold;
  if (replication) {
    in.health = health(now);
    in.live_state_entry = states_.lookup(id, RequestType::registration, now).hit();
    in.probationary_enabled = config_.probationary.enabled;
    in.unknown_roamer = !in.live_state_entry && !in.live_decision_entry &&
                        core_.core.is_roaming(a->request.home_network);
  }

  switch (route_registration(in)) {
    case RoutingDecision::standard: run_standard(a); break;
    case RoutingDecision::express: run_express(a); break;
    case RoutingDecision::delegated: run_delegated(a); break;
    case RoutingDecision::probationary: run_probationary(a); break;
    case RoutingDecision::reject: reject(a, Outcome::rejected, RoutingDecision::reject); break;
  }
}

void Ric::run_standard(const std::shared_ptr<Attempt>& a) {
  run_standard_registration(core_, *a->ue, a->request, a->account, [this, a](const RegistrationResult& r) {
    if (r.outcome == Outcome::success && uses_ric(config_.design) && r.network_keys && r.session) {
      capture(a->request.cached_id, r.network_keys->k_seaf, r.subscription, r.session->slice);
    }
    finish(a, r.outcome, RoutingDecision::standard);
  });
}

void Ric::local_challenge(const std::shared_ptr<Attempt>& a,
                          std::function<void(std::uint64_t, std::optional<Digest>)> k) {
  const std::uint64_t nonce = local_auth_.issue(a->request.cached_id);
  const std::string ue = a->ue->endpoint();
  fabric_.send(Hop::radio, "ran", ue, "LocalChallenge", a->account, [this, a, nonce, ue, k] {
    auto proof = a->ue->on_local_challenge(nonce);
    fabric_.send(Hop::radio, ue, "ran", "LocalChallengeResponse", a->account,
                 [nonce, proof, k] { k(nonce, proof); });
  });
}

void Ric::run_express(const std::shared_ptr<Attempt>& a) {
  xapps_.dispatch(kernel_, xapp::kExpress, [this, a] {
    const CachedId id = a->request.cached_id;
    if (!decisions_.lookup(id, RequestType::registration, kernel_.now()).hit()) {
      route(a);
      return;
    }
    local_challenge(a, [this, a, id](std::uint64_t nonce, std::optional<Digest> proof) {
      const auto r = decisions_.lookup(id, RequestType::registration, kernel_.now());
      if (!r.hit()) {
        log(a->request.ue_id, "express-expired", "rerouting");
        route(a);
        return;
      }
      if (!proof || !local_auth_.verify(id, nonce, *proof, r.entry->cached_keys.k_seaf)) {
        reject(a, Outcome::challenge_failed, RoutingDecision::express);
        return;
      }
      LocalSession s;
      s.slice = r.entry->control_plane_decisions.at(RequestType::registration).slice_grant;
      s.services = {a->request.service};
      s.path = RoutingDecision::express;
      accept(a, std::move(s));
    });
  });
}

void Ric::run_delegated(const std::shared_ptr<Attempt>& a) {
  xapps_.dispatch(kernel_, xapp::kAuthProxy, [this, a] {
    const CachedId id = a->request.cached_id;
    if (!states_.lookup(id, RequestType::registration, kernel_.now()).hit()) {
      route(a);
      return;
    }
    local_challenge(a, [this, a, id](std::uint64_t nonce, std::optional<Digest> proof) {
      const auto r = states_.lookup(id, RequestType::registration, kernel_.now());
      if (!r.hit()) {
        log(a->request.ue_id, "delegated-expired", "rerouting");
        route(a);
        return;
      }
      if (residency_) residency_->record(HostClass::edge, KeyLevel::nas);
      if (!proof || !local_auth_.verify(id, nonce, *proof, r.entry->decisions.cached_keys.k_seaf)) {
        reject(a, Outcome::challenge_failed, RoutingDecision::delegated);
        return;
      }
      const SubscriptionPolicy policy = r.entry->control_plane_state;
      xapps_.dispatch(kernel_, xapp::kPolicyProxy, [this, a, policy] {
        if (!policy.authorizes(a->request.service) || !policy.allows_slice(a->request.slice)) {
          log(a->request.ue_id, "delegated-denied", "service=" + a->request.service);
          reject(a, Outcome::policy_denied, RoutingDecision::delegated);
          return;
        }
        xapps_.dispatch(kernel_, xapp::kSessionProxy, [this, a, policy] {
          LocalSession s;
          s.slice = a->request.slice;
          s.services = policy.authorized_services;
          s.path = RoutingDecision::delegated;
          log(a->request.ue_id, "delegated-grant", "slice=" + s.slice + " services=" + join(s.services));
          accept(a, std::move(s));
        });
      });
    });
  });
}

void Ric::run_probationary(const std::shared_ptr<Attempt>& a) {
  xapps_.dispatch(kernel_, xapp::kProbationary, [this, a] {
    LocalSession s;
    s.slice = config_.probationary.slice;
    s.services = config_.probationary.services;
    s.path = RoutingDecision::probationary;
    s.probationary = true;
    log(a->request.ue_id, "probationary-admit", "slice=" + s.slice + " services=" + join(s.services));
    deferred_.push_back(Deferred{a->ue, a->request});
    log(a->request.ue_id, "deferred-auth-queued");
    accept(a, std::move(s));
  });
}

void Ric::accept(const std::shared_ptr<Attempt>& a, LocalSession session) {
  const CachedId id = a->request.cached_id;
  if (const auto it = sessions_.find(id); it != sessions_.end()) {
    if (ran_pool_.contains(it->second.address)) ran_pool_.release(it->second.address);
    sessions_.erase(it);
  }
  const auto address = ran_pool_.allocate();
  if (!address) {
    reject(a, Outcome::rejected, session.path);
    return;
  }
  session.ue = id;
  session.ue_id = a->request.ue_id;
  session.address = *address;
  session.locally_granted = true;
  session.established_at = kernel_.now();
  const RoutingDecision path = session.path;
  sessions_[id] = std::move(session);
  fabric_.send(Hop::radio, "ran", a->ue->endpoint(), "RegistrationAccept", a->account,
               [this, a, path] { finish(a, Outcome::success, path); });
}

void Ric::reject(const std::shared_ptr<Attempt>& a, Outcome outcome, RoutingDecision path) {
  fabric_.send(Hop::radio, "ran", a->ue->endpoint(), "RegistrationReject", a->account,
               [this, a, outcome, path] { finish(a, outcome, path); });
}

void Ric::finish(const std::shared_ptr<Attempt>& a, Outcome outcome, RoutingDecision path) {
  if (a->finished) return;
  a->finished = true;
  auto done = std::move(a->done);
  if (done) done(AttemptResult{outcome, path, kernel_.now()});
}

void Ric::capture(const CachedId& ue, const KSeaf& k_seaf, const SubscriptionPolicy& policy,
                  const SliceId& slice) {
  const SimTime now = kernel_.now();
  const bool eligible = eligible_.contains(ue);
  if (config_.design == Design::logic_replication) {
    store_state(make_state_entry(ue, k_seaf, policy, slice, config_.capture_ttl, now));
  }
  if (eligible && uses_ric(config_.design)) {
    store_decision(make_decision_entry(ue, k_seaf, policy, slice, config_.capture_ttl, now));
  }
}

void Ric::start_deferred() {
  auto batch = std::move(deferred_);
  deferred_.clear();
  for (auto& d : batch) {
    log(d.request.ue_id, "deferred-auth-started");
    run_standard_registration(core_, *d.ue, d.request, deferred_account_,
                              [this, d](const RegistrationResult& r) {
      const CachedId id = d.request.cached_id;
      const std::string& who = d.request.ue_id;
      if (r.outcome == Outcome::success && r.network_keys && r.session) {
        log(who, "deferred-auth-success");
        if (auto it = sessions_.find(id); it != sessions_.end()) {
          auto& s = it->second;
          if (ran_pool_.contains(s.address)) ran_pool_.release(s.address);
          s.slice = r.session->slice;
          s.services = r.subscription.authorized_services;
          s.address = r.session->assigned_address;
          s.probationary = false;
          s.locally_granted = false;
          log(who, "migrated", "slice=" + s.slice + " services=" + join(s.services));
        }
        capture(id, r.network_keys->k_seaf, r.subscription, r.session->slice);
        log(who, "state-cached");
        return;
      }
      if (r.outcome == Outcome::timeout) {
        deferred_.push_back(d);
        log(who, "deferred-auth-requeued");
        return;
      }
      log(who, "deferred-auth-failed", std::string(to_string(r.outcome)));
      release(id);
      log(who, "terminated");
      blacklist_.insert(id);
      log(who, "blacklisted");
    });
  }
}

void Ric::handle_reauthentication(UeEndpoint& ue, RegistrationRequest request, AccountId account,
                                  std::function<void(bool)> done) {
  const SimTime now = kernel_.now();
  const CachedId id = request.cached_id;
  UeEndpoint* uep = &ue;

  auto core_round = [this, uep, request, account, done, id](bool reconciling) {
    run_core_reauthentication(core_, *uep, request, account, [this, request, done, id, reconciling](
                                                                  const RegistrationResult& r) {
      if (r.outcome != Outcome::success) {
        release(id);
        if (done) done(false);
        return;
      }
      SliceId slice = request.slice;
      if (auto it = sessions_.find(id); it != sessions_.end()) {
        slice = it->second.slice;
        if (reconciling) {
          it->second.locally_granted = false;
          log(request.ue_id, "reconciled", "slice=" + slice);
        }
      }
      if (uses_ric(config_.design) && r.network_keys) capture(id, r.network_keys->k_seaf, r.subscription, slice);
      if (done) done(true);
    });
  };

  if (uses_ric(config_.design)) {
    const bool state_live = states_.lookup(id, RequestType::reauthentication, now).hit();
    const bool decision_live = decisions_.lookup(id, RequestType::reauthentication, now).hit();
    if (state_live || decision_live) {
      const auto session = sessions_.find(id);
      const bool local_grant = session != sessions_.end() && session->second.locally_granted;
      if (local_grant && config_.design == Design::logic_replication &&
          backhaul_usable(health(now), config_.assessment.link_bandwidth, config_.bandwidth_threshold)) {
        core_round(true);
        return;
      }
      auto a = std::make_shared<Attempt>(Attempt{uep, request, account, {}});
      xapps_.dispatch(kernel_, xapp::kMonitor, [this, a, id, done] {
        local_challenge(a, [this, id, done](std::uint64_t nonce, std::optional<Digest> proof) {
          const SimTime t = kernel_.now();
          std::optional<KSeaf> k;
          if (auto s = states_.lookup(id, RequestType::reauthentication, t); s.hit()) {
            k = s.entry->decisions.cached_keys.k_seaf;
          } else if (auto d = decisions_.lookup(id, RequestType::reauthentication, t); d.hit()) {
            k = d.entry->cached_keys.k_seaf;
          }
          const bool ok = k && proof && local_auth_.verify(id, nonce, *proof, *k);
          if (!ok) release(id);
          if (done) done(ok);
        });
      });
      return;
    }
  }
  core_round(false);
}

void Ric::release(const CachedId& ue) {
  if (const auto it = sessions_.find(ue); it != sessions_.end()) {
    if (ran_pool_.contains(it->second.address)) ran_pool_.release(it->second.address);
    sessions_.erase(it);
  }
  core_.core.release_session(ue);
}

void Ric::write_snapshot(std::ostream& out, SimTime now) const {
  auto line = [&](std::string_view cache, const DecisionCacheEntry& e) {
    out << cache << ',' << to_hex(ByteView(e.ue_cached_id)) << ',' << fingerprint(e.cached_keys.k_seaf) << ','
        << (e.expires_at() - now) << '\n';
  };
  for (const DecisionCacheEntry& e : decisions_.live_entries(now)) line("decision", e);
  for (const StateCacheEntry& e : states_.live_entries(now)) line("state", e.decisions);
}

}  // namespace ransim
