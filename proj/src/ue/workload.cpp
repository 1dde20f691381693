#include "ransim/ue/workload.hpp"

#include <cmath>

#include "ransim/common.hpp"

namespace ransim {

namespace {

SimTime poisson_gap(RandomSource& rng, double rate_per_s) {
  return static_cast<SimTime>(std::floor(rng.exponential(rate_per_s / 1000.0)));
}

}  // namespace

std::vector<SimTime> arrival_times(const ArrivalSpec& spec, std::size_t count, RandomSource& rng) {
  std::vector<SimTime> out;
  out.reserve(count);
  switch (spec.kind) {
    case ArrivalKind::fixed:
      for (std::size_t i = 0; i < count; ++i) out.push_back(spec.at_ms + static_cast<SimTime>(i) * spec.spacing_ms);
      break;
    case ArrivalKind::rate:
      if (spec.rate_per_s <= 0) throw Error(ErrorCode::invalid_argument, "rate_per_s must be positive");
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(spec.at_ms + static_cast<SimTime>(std::floor(static_cast<double>(i) * 1000.0 / spec.rate_per_s)));
      }
      break;
    case ArrivalKind::poisson: {
      if (spec.rate_per_s <= 0) throw Error(ErrorCode::invalid_argument, "rate_per_s must be positive");
      SimTime t = spec.at_ms;
      for (std::size_t i = 0; i < count; ++i) {
        t += poisson_gap(rng, spec.rate_per_s);
        out.push_back(t);
      }
      break;
    }
    case ArrivalKind::burst: {
      const std::size_t burst = std::min(spec.burst_size, count);
      for (std::size_t i = 0; i < burst; ++i) out.push_back(spec.at_ms);
      if (count > burst && spec.tail_rate_per_s <= 0) {
        throw Error(ErrorCode::invalid_argument, "tail_rate_per_s must be positive");
      }
      SimTime t = spec.at_ms;
      for (std::size_t i = burst; i < count; ++i) {
        t += poisson_gap(rng, spec.tail_rate_per_s);
        out.push_back(t);
      }
      break;
    }
  }
  return out;
}

std::vector<SimTime> attempt_times(const UeProfile& profile, SimTime first_arrival, SimTime horizon) {
  std::vector<SimTime> out;
  if (first_arrival >= horizon) return out;
  if (profile.behavior != Behavior::periodic_sensor) {
    out.push_back(first_arrival);
    return out;
  }
  if (profile.period_ms <= 0) throw Error(ErrorCode::invalid_argument, "period_ms must be positive");
  for (SimTime t = first_arrival; t < horizon; t += profile.period_ms) out.push_back(t);
  return out;
}

std::vector<SimTime> run_behavior(Kernel& kernel, const UeProfile& profile, SimTime first_arrival,
                                  SimTime horizon, std::function<void(SimTime)> on_attempt) {
  auto times = attempt_times(profile, first_arrival, horizon);
  for (SimTime t : times) {
    kernel.schedule_at(t, profile.ue_id, "RegistrationAttempt", [on_attempt, t] { on_attempt(t); });
  }
  return times;
}

UeProfile make_attacker(std::string ue_id, std::string population, const NetworkId& claimed_home,
                        RandomSource& rng) {
  UeProfile p;
  p.ue_id = std::move(ue_id);
  p.population = std::move(population);
  p.identity = conceal_identity("imsi-attacker-" + to_hex(ByteView(rng.bytes<8>())), claimed_home);
  p.usim = UsimState{RootSecret{rng.bytes<32>()}, 0, 1, {}};
  p.behavior = Behavior::attacker_flood;
  p.home_network = claimed_home;
  p.slice = "embb";
  p.service = "web";
  return p;
}

}  // namespace ransim
