#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ransim/link/fabric.hpp"

namespace ransim {

struct BackhaulHealth {
  bool reachable = true;
  double measured_rtt = 0.0;  // ms
  std::uint64_t available_bandwidth = 0;  // bytes/s
  SimTime assessed_at = 0;
};

struct ProbeSample {
  SimTime sent_at = 0;
  std::optional<SimTime> rtt;  // empty: lost or answered too late
};

struct AssessmentConfig {
  SimTime probe_interval = 1000;
  SimTime probe_timeout = 2000;
  double rtt_weight = 0.3;
  std::uint64_t link_bandwidth = 1'250'000;
  SimTime utilization_window = 1000;
};

/// Pure assessment. `history` holds resolved probes oldest first; with no
/// history the link is presumed reachable. `utilization_bytes` counts both
/// directions over the last utilization window.
BackhaulHealth assess_backhaul(const std::vector<ProbeSample>& history, std::uint64_t utilization_bytes,
                               const AssessmentConfig& config, SimTime now);

/// Sends a small probe over the backhaul every probe interval and resolves
/// it as answered (with RTT) or lost once the ack arrives or the timeout
/// passes, whichever comes first.
class ProbeMonitor {
 public:
  using Listener = std::function<void(const ProbeSample&)>;

  ProbeMonitor(Fabric& fabric, AssessmentConfig config, AccountId account);

  /// Probes at 0, interval, 2 * interval, ... while before `until`.
  void start(SimTime until);

  void on_resolved(Listener listener) { listeners_.push_back(std::move(listener)); }

  const std::vector<ProbeSample>& history() const noexcept { return history_; }
  std::size_t outstanding() const noexcept { return outstanding_; }

 private:
  void send_probe();
  void resolve(std::size_t slot, std::optional<SimTime> rtt);

  Fabric& fabric_;
  AssessmentConfig config_;
  AccountId account_;
  SimTime until_ = 0;
  std::vector<ProbeSample> history_;
  std::vector<bool> resolved_;
  std::vector<SimTime> sent_;
  std::size_t outstanding_ = 0;
  std::vector<Listener> listeners_;
};

}  // namespace ransim
