#pragma once

#include <cstddef>
#include <deque>
#include <map>

#include "ransim/crypto/keys.hpp"
#include "ransim/common.hpp"

namespace ransim {

struct DosFilterConfig {
  SimTime window = 1000;
  std::size_t unknown_threshold = 50;  // unknown-id arrivals per window
  std::size_t retry_limit = 5;         // arrivals per id per window
};

enum class FilterVerdict { pass, drop };

/// Sliding-window rate limiter over arrivals in (now - window, now].
/// Dropped arrivals still count toward both windows.
class DosFilter {
 public:
  explicit DosFilter(DosFilterConfig config = {}) : config_(config) {}

  /// `known` means the RAN holds a live cache entry for the id. Calls must
  /// come in nondecreasing `now`.
  FilterVerdict check(const CachedId& id, bool known, SimTime now);

  std::size_t dropped() const noexcept { return dropped_; }
  std::size_t passed() const noexcept { return passed_; }
  const DosFilterConfig& config() const noexcept { return config_; }

 private:
  void expire(std::deque<SimTime>& times, SimTime now) const;

  DosFilterConfig config_;
  std::deque<SimTime> unknown_arrivals_;
  std::map<CachedId, std::deque<SimTime>> per_id_;
  std::size_t dropped_ = 0;
  std::size_t passed_ = 0;
};

}  // namespace ransim
