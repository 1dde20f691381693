#include "ransim/link/backhaul_link.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ransim {

void BackhaulProfile::validate() const {
  if (bandwidth == 0) throw Error(ErrorCode::validation_error, "bandwidth: must be > 0");
  if (!(loss_probability >= 0.0 && loss_probability <= 1.0)) {
    throw Error(ErrorCode::validation_error, "loss_probability: must lie in [0, 1]");
  }
  if (base_latency < 0) throw Error(ErrorCode::validation_error, "base_latency: must be >= 0");
  if (jitter < 0 || jitter > base_latency) {
    throw Error(ErrorCode::validation_error, "jitter: must lie in [0, base_latency]");
  }
  for (std::size_t i = 0; i < outages.size(); ++i) {
    const auto& o = outages[i];
    if (o.start < 0 || o.end <= o.start) {
      throw Error(ErrorCode::validation_error,
                  "outages: interval " + std::to_string(i) + " is empty or negative");
    }
    if (i > 0 && o.start < outages[i - 1].end) {
      throw Error(ErrorCode::validation_error,
                  "outages: interval " + std::to_string(i) + " overlaps or is out of order");
    }
  }
}

bool BackhaulProfile::in_outage(SimTime t) const {
  return std::any_of(outages.begin(), outages.end(),
                     [t](const OutageInterval& o) { return t >= o.start && t < o.end; });
}

bool BackhaulProfile::outage_overlaps(SimTime from, SimTime to) const {
  return std::any_of(outages.begin(), outages.end(),
                     [&](const OutageInterval& o) { return o.start <= to && o.end > from; });
}

BackhaulLink::BackhaulLink(BackhaulProfile profile) : profile_(std::move(profile)) {
  profile_.validate();
}

Transmission BackhaulLink::transmit(Direction dir, std::uint64_t size, SimTime at, RandomSource& rng) {
  if (!cumulative_.empty() && at < cumulative_.back().first) {
    throw std::invalid_argument("transmit: send times must be nondecreasing");
  }
  bytes_sent_ += size;
  ++messages_sent_;
  cumulative_.emplace_back(at, bytes_sent_);

  const auto bw = profile_.bandwidth;
  const auto serialization_us = static_cast<std::int64_t>((size * 1'000'000 + bw - 1) / bw);
  auto& busy = busy_until_us_[dir == Direction::uplink ? 0 : 1];
  const std::int64_t start_us = std::max<std::int64_t>(at * 1000, busy);
  busy = start_us + serialization_us;

  SimTime jitter = 0;
  if (profile_.jitter > 0) jitter = rng.uniform_int(-profile_.jitter, profile_.jitter);
  const bool lost = profile_.loss_probability > 0.0 && rng.uniform01() < profile_.loss_probability;

  Transmission t;
  t.deliver_at = (busy + 999) / 1000 + profile_.base_latency + jitter;
  if (profile_.outage_overlaps(at, t.deliver_at)) {
    t.cause = DropCause::outage;
  } else if (lost) {
    t.cause = DropCause::loss;
  } else {
    t.delivered = true;
  }
  if (!t.delivered) ++messages_dropped_;
  return t;
}

std::uint64_t BackhaulLink::utilization(SimTime window, SimTime now) const {
  if (window <= 0) throw std::invalid_argument("utilization: window must be > 0");
  auto by_time = [](const std::pair<SimTime, std::uint64_t>& e, SimTime t) { return e.first < t; };
  const auto lo = std::lower_bound(cumulative_.begin(), cumulative_.end(), now - window, by_time);
  const auto hi = std::upper_bound(cumulative_.begin(), cumulative_.end(), now,
                                   [](SimTime t, const auto& e) { return t < e.first; });
  if (hi == cumulative_.begin() || lo >= hi) return 0;
  const std::uint64_t before = lo == cumulative_.begin() ? 0 : std::prev(lo)->second;
  return std::prev(hi)->second - before;
}

}  // namespace ransim
