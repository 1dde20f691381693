#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ransim/common.hpp"
#include "ransim/sim/random.hpp"

namespace ransim {

/// Half-open outage interval [start, end).
struct OutageInterval {
  SimTime start = 0;
  SimTime end = 0;

  friend bool operator==(const OutageInterval&, const OutageInterval&) = default;
};

struct BackhaulProfile {
  SimTime base_latency = 10;  // one-way, ms
  SimTime jitter = 0;         // uniform half-width, ms
  std::uint64_t bandwidth = 1'250'000;  // bytes per second, per direction
  double loss_probability = 0.0;
  std::vector<OutageInterval> outages;

  /// Throws Error(validation_error) naming the offending field.
  void validate() const;

  bool in_outage(SimTime t) const;

  /// True if any outage intersects the closed interval [from, to].
  bool outage_overlaps(SimTime from, SimTime to) const;
};

enum class Direction { uplink, downlink };

enum class DropCause { none, outage, loss };

struct Transmission {
  bool delivered = false;
  SimTime deliver_at = 0;
  DropCause cause = DropCause::none;
};

/// Point-to-point RAN<->core link. Each direction is a FIFO transmitter with
/// an unbounded buffer; serialization is tracked in microseconds and the
/// delivery instant is rounded up to the next millisecond.
class BackhaulLink {
 public:
  explicit BackhaulLink(BackhaulProfile profile);

  /// `at` must be nondecreasing across calls. Bytes are counted whether or
  /// not the message survives.
  Transmission transmit(Direction dir, std::uint64_t size, SimTime at, RandomSource& rng);

  /// Bytes handed to the link with send time in [now - window, now].
  std::uint64_t utilization(SimTime window, SimTime now) const;

  const BackhaulProfile& profile() const noexcept { return profile_; }
  std::uint64_t bytes_sent() const noexcept { return bytes_sent_; }
  std::uint64_t messages_sent() const noexcept { return messages_sent_; }
  std::uint64_t messages_dropped() const noexcept { return messages_dropped_; }

 private:
  BackhaulProfile profile_;
  std::array<std::int64_t, 2> busy_until_us_{0, 0};
  std::vector<std::pair<SimTime, std::uint64_t>> cumulative_;  // (send time, running byte total)
  std::uint64_t bytes_sent_ = 0;
  std::uint64_t messages_sent_ = 0;
  std::uint64_t messages_dropped_ = 0;
};

}  // namespace ransim
