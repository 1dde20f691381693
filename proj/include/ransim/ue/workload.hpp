#pragma once

#include <functional>
#include <vector>

#include "ransim/sim/kernel.hpp"
#include "ransim/ue/ue_profile.hpp"

namespace ransim {

/// First-arrival times for `count` UEs, nondecreasing.
std::vector<SimTime> arrival_times(const ArrivalSpec& spec, std::size_t count, RandomSource& rng);

/// Registration attempts a UE makes before `horizon`: one for interactive,
/// roamer and attacker UEs, one per period for periodic sensors.
std::vector<SimTime> attempt_times(const UeProfile& profile, SimTime first_arrival, SimTime horizon);

/// Schedules `on_attempt` at every attempt time. Returns those times.
std::vector<SimTime> run_behavior(Kernel& kernel, const UeProfile& profile, SimTime first_arrival,
                                  SimTime horizon, std::function<void(SimTime)> on_attempt);

/// Fresh random identity and K that no network has provisioned.
UeProfile make_attacker(std::string ue_id, std::string population, const NetworkId& claimed_home,
                        RandomSource& rng);

}  // namespace ransim
