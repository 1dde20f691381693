#include "ransim/core/procedures.hpp"

#include <memory>

namespace ransim {

namespace {

constexpr const char* kSeaf = "seaf";
constexpr const char* kUdm = "udm";
constexpr const char* kHomeUdm = "home-udm";

Outcome outcome_for(ChallengeStatus status) {
  return status == ChallengeStatus::sync_failure ? Outcome::sync_failure : Outcome::mac_failure;
}

class CoreFlow : public std::enable_shared_from_this<CoreFlow> {
 public:
  enum class Mode { registration, reauthentication };

  CoreFlow(const CoreContext& ctx, UeEndpoint& ue, RegistrationRequest request, AccountId account,
           RegistrationCallback done, Mode mode)
      : ctx_(ctx), ue_(ue), req_(std::move(request)), account_(account), done_(std::move(done)),
        mode_(mode) {}

  void start() {
    auto self = shared_from_this();
    ctx_.kernel.schedule(ctx_.request_timeout, "core", "RequestTimeout", [self] {
      if (!self->finished_) self->finish(Outcome::timeout);
    });
    if (mode_ == Mode::registration) {
      send(Hop::backhaul_up, ctx_.ran, "amf", "RegistrationRequest", &CoreFlow::at_amf);
    } else {
      at_amf();
    }
  }

 private:
  using Step = void (CoreFlow::*)();

  void send(Hop hop, std::string_view src, std::string_view dst, std::string_view type, Step next) {
    auto self = shared_from_this();
    ctx_.fabric.send(hop, src, dst, type, account_, [self, next] {
      if (!self->finished_) ((*self).*next)();
    });
  }

  void at_amf() {
    auto& nfs = ctx_.core.nfs();
    try {
      amf_ = nfs.select_nf(NfKind::amf);
      ausf_ = nfs.select_nf(NfKind::ausf);
    } catch (const Error&) {
      amf_.clear();
      ausf_.clear();
      send(Hop::backhaul_down, "amf", ctx_.ran, "RegistrationReject", &CoreFlow::reject_at_ran);
      outcome_ = Outcome::rejected;
      return;
    }
    nfs.acquire(amf_);
    nfs.acquire(ausf_);
    send(Hop::core_internal, amf_, ausf_, "UeAuthenticationRequest", &CoreFlow::at_ausf);
  }

  void at_ausf() {
    db_ = ctx_.core.database_for(req_.home_network);
    if (db_ == nullptr) {
      outcome_ = Outcome::subscriber_not_found;
      send(Hop::core_internal, ausf_, kSeaf, "UeAuthenticationResponse", &CoreFlow::at_seaf);
      return;
    }
    if (ctx_.core.is_roaming(req_.home_network)) {
      send(Hop::home_up, ausf_, kHomeUdm, "AuthVectorRequest", &CoreFlow::at_udm);
    } else {
      send(Hop::core_internal, ausf_, kUdm, "AuthVectorRequest", &CoreFlow::at_udm);
    }
  }

  void at_udm() {
    const bool roaming = ctx_.core.is_roaming(req_.home_network);
    issued_ = db_->generate_av(req_.suci, ctx_.core.serving_network(), ctx_.av_rng);
    if (!issued_) {
      outcome_ = Outcome::subscriber_not_found;
    } else if (auto* log = ctx_.core.residency()) {
      log->record(roaming ? HostClass::home_network : ctx_.core.host(), KeyLevel::root);
    }
    if (roaming) {
      send(Hop::home_down, kHomeUdm, ausf_, "AuthVectorResponse", &CoreFlow::at_ausf_with_av);
    } else {
      send(Hop::core_internal, kUdm, ausf_, "AuthVectorResponse", &CoreFlow::at_ausf_with_av);
    }
  }

  void at_ausf_with_av() {
    if (issued_) {
      serving_av_ = to_serving_vector(issued_->av, ctx_.core.serving_network());
      if (auto* log = ctx_.core.residency()) log->record(ctx_.core.host(), KeyLevel::ausf);
    }
    send(Hop::core_internal, ausf_, kSeaf, "UeAuthenticationResponse", &CoreFlow::at_seaf);
  }

  void at_seaf() {
    if (!serving_av_) {
      reject(Outcome::subscriber_not_found);
      return;
    }
    if (auto* log = ctx_.core.residency()) log->record(ctx_.core.host(), KeyLevel::seaf);
    send(Hop::backhaul_down, "amf", ctx_.ran, "AuthenticationRequest", &CoreFlow::challenge_at_ran);
  }

  void challenge_at_ran() {
    send(Hop::radio, ctx_.ran, ue_.endpoint(), "AuthenticationRequest", &CoreFlow::challenge_at_ue);
  }

  void challenge_at_ue() {
    const ChallengeResult r =
        ue_.on_auth_challenge(serving_av_->rand, serving_av_->autn, ctx_.core.serving_network());
    if (!r.ok()) {
      outcome_ = outcome_for(r.status);
      send(Hop::radio, ue_.endpoint(), ctx_.ran, "AuthenticationFailure", &CoreFlow::failure_at_ran);
      return;
    }
    res_ = r.response;
    send(Hop::radio, ue_.endpoint(), ctx_.ran, "AuthenticationResponse", &CoreFlow::response_at_ran);
  }

  void failure_at_ran() {
    send(Hop::backhaul_up, ctx_.ran, "amf", "AuthenticationFailure", &CoreFlow::failure_at_amf);
  }

  void failure_at_amf() {
    if (mode_ == Mode::reauthentication) {
      finish(outcome_);
    } else {
      reject(outcome_);
    }
  }

  void response_at_ran() {
    send(Hop::backhaul_up, ctx_.ran, "amf", "AuthenticationResponse", &CoreFlow::response_at_seaf);
  }

  void response_at_seaf() {
    if (res_ != serving_av_->xres) {
      reject(Outcome::challenge_failed);
      return;
    }
    keys_ = expand_hierarchy(issued_->av.k_derived, ctx_.core.serving_network(), issued_->identity);
    if (auto* log = ctx_.core.residency()) log->record(ctx_.core.host(), KeyLevel::amf);
    ctx_.core.record_authentication(issued_->identity.cached_id, ctx_.kernel.now());

    if (mode_ == Mode::reauthentication) {
      send(Hop::backhaul_down, "amf", ctx_.ran, "AuthenticationResult", &CoreFlow::succeed);
      return;
    }
    send(Hop::backhaul_down, "amf", ctx_.ran, "RegistrationAccept", &CoreFlow::accept_at_ran);
  }

  void accept_at_ran() {
    send(Hop::radio, ctx_.ran, ue_.endpoint(), "RegistrationAccept", &CoreFlow::accept_at_ue);
  }

  void accept_at_ue() {
    send(Hop::radio, ue_.endpoint(), ctx_.ran, "PduSessionEstablishmentRequest",
         &CoreFlow::pdu_request_at_ran);
  }

  void pdu_request_at_ran() {
    send(Hop::backhaul_up, ctx_.ran, "amf", "PduSessionEstablishmentRequest",
         &CoreFlow::pdu_request_at_amf);
  }

  void pdu_request_at_amf() {
    AuthenticatedContext ctx{issued_->identity, keys_, issued_->subscription};
    const SessionResult s =
        ctx_.core.establish_session(ctx, req_.slice, issued_->subscription.qos_class, ctx_.kernel.now());
    if (s.status != SessionStatus::established) {
      outcome_ = s.status == SessionStatus::policy_denied ? Outcome::policy_denied : Outcome::rejected;
      send(Hop::backhaul_down, "amf", ctx_.ran, "PduSessionReject", &CoreFlow::reject_at_ran);
      return;
    }
    session_ = s.session;
    send(Hop::core_internal, amf_, session_->smf, "CreateSmContext", &CoreFlow::at_smf);
  }

  void at_smf() { send(Hop::core_internal, session_->smf, "pcf", "SmPolicyRequest", &CoreFlow::at_pcf); }
  void at_pcf() { send(Hop::core_internal, "pcf", session_->smf, "SmPolicyResponse", &CoreFlow::smf_policy); }
  void smf_policy() {
    send(Hop::core_internal, session_->smf, session_->upf, "N4SessionEstablishment", &CoreFlow::at_upf);
  }
  void at_upf() {
    send(Hop::core_internal, session_->upf, session_->smf, "N4SessionResponse", &CoreFlow::smf_done);
  }
  void smf_done() {
    send(Hop::core_internal, session_->smf, amf_, "CreateSmContextResponse", &CoreFlow::session_at_amf);
  }
  void session_at_amf() {
    send(Hop::backhaul_down, "amf", ctx_.ran, "PduSessionAccept", &CoreFlow::session_at_ran);
  }
  void session_at_ran() {
    send(Hop::radio, ctx_.ran, ue_.endpoint(), "PduSessionAccept", &CoreFlow::succeed);
  }

  void succeed() { finish(Outcome::success); }

  void reject(Outcome outcome) {
    outcome_ = outcome;
    send(Hop::backhaul_down, "amf", ctx_.ran, "RegistrationReject", &CoreFlow::reject_at_ran);
  }

  void reject_at_ran() {
    send(Hop::radio, ctx_.ran, ue_.endpoint(), "RegistrationReject", &CoreFlow::reject_at_ue);
  }

  void reject_at_ue() { finish(outcome_); }

  void finish(Outcome outcome) {
    finished_ = true;
    if (!amf_.empty()) ctx_.core.nfs().release(amf_);
    if (!ausf_.empty()) ctx_.core.nfs().release(ausf_);

    RegistrationResult result;
    result.outcome = outcome;
    result.finished_at = ctx_.kernel.now();
    if (outcome == Outcome::success) {
      result.session = session_;
      result.network_keys = keys_;
      result.subscription = issued_->subscription;
    } else if (session_ && mode_ == Mode::registration) {
      ctx_.core.release_session(session_->ue);
    }
    auto done = std::move(done_);
    done(result);
  }

  CoreContext ctx_;
  UeEndpoint& ue_;
  RegistrationRequest req_;
  AccountId account_;
  RegistrationCallback done_;
  Mode mode_;

  bool finished_ = false;
  Outcome outcome_ = Outcome::rejected;
  std::string amf_;
  std::string ausf_;
  SubscriberDatabase* db_ = nullptr;
  std::optional<IssuedVector> issued_;
  std::optional<ServingAuthenticationVector> serving_av_;
  Digest res_{};
  std::optional<KeyHierarchy> keys_;
  std::optional<SessionRecord> session_;
};

}  // namespace

void run_standard_registration(const CoreContext& ctx, UeEndpoint& ue, RegistrationRequest request,
                               AccountId account, RegistrationCallback done) {
  std::make_shared<CoreFlow>(ctx, ue, std::move(request), account, std::move(done),
                             CoreFlow::Mode::registration)
      ->start();
}

void run_core_reauthentication(const CoreContext& ctx, UeEndpoint& ue, RegistrationRequest request,
                               AccountId account, RegistrationCallback done) {
  std::make_shared<CoreFlow>(ctx, ue, std::move(request), account, std::move(done),
                             CoreFlow::Mode::reauthentication)
      ->start();
}

std::vector<SimTime> monitor_and_reauthenticate(Kernel& kernel, const SessionRecord& session,
                                                SimTime interval, SimTime horizon,
                                                std::function<void(SimTime)> tick) {
  if (interval <= 0) throw Error(ErrorCode::invalid_argument, "reauth interval must be positive");
  std::vector<SimTime> ticks;
  for (SimTime t = session.established_at + interval; t < horizon; t += interval) {
    ticks.push_back(t);
    if (t < kernel.now()) continue;
    kernel.schedule_at(t, "amf", "Reauthenticate", [tick, t] {
      if (tick) tick(t);
    });
  }
  return ticks;
}

}  // namespace ransim
