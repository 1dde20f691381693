#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ransim/common.hpp"
#include "ransim/sim/random.hpp"

namespace ransim {

using EntityId = std::string;
using EventId = std::uint64_t;

struct TraceRecord {
  SimTime time = 0;
  EventId id = 0;
  EntityId target;
  std::string label;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// Single-queue discrete-event engine. Events fire in (fire_time, sequence)
/// order; the sequence number doubles as the event id.
class Kernel {
 public:
  using Handler = std::function<void()>;

  explicit Kernel(std::uint64_t seed = 0) : seed_(seed) {}

  Kernel(const Kernel&) = delete;
  Kernel& operator=(const Kernel&) = delete;

  /// Enqueue at now + delay. Throws std::invalid_argument if delay < 0.
  EventId schedule(SimTime delay, EntityId target, std::string label, Handler handler = {});

  /// Enqueue at an absolute time >= now.
  EventId schedule_at(SimTime at, EntityId target, std::string label, Handler handler = {});

  /// Processes every event with fire_time <= t_end, then sets the clock to
  /// t_end. Returns the number of events processed.
  std::size_t run_until(SimTime t_end);

  SimTime now() const noexcept { return now_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t pending() const noexcept { return queue_.size(); }

  /// Independent stream for `label`; identical for identical (seed, label).
  RandomSource seeded_random(std::string_view label) const { return RandomSource(seed_, label); }

  void set_tracing(bool on) { tracing_ = on; }
  const std::vector<TraceRecord>& trace() const noexcept { return trace_; }

 private:
  struct Event {
    SimTime fire_time;
    EventId sequence;
    EntityId target;
    std::string label;
    Handler handler;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const noexcept {
      if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
      return a.sequence > b.sequence;
    }
  };

  std::uint64_t seed_;
  SimTime now_ = 0;
  EventId next_id_ = 1;
  std::vector<Event> queue_;  // binary heap ordered by Later
  bool tracing_ = false;
  std::vector<TraceRecord> trace_;
};

}  // namespace ransim
