#include "ransim/ran/backhaul_monitor.hpp"

#include <algorithm>

namespace ransim {

BackhaulHealth assess_backhaul(const std::vector<ProbeSample>& history, std::uint64_t utilization_bytes,
                               const AssessmentConfig& config, SimTime now) {
  BackhaulHealth h;
  h.assessed_at = now;
  if (!history.empty()) {
    const auto& last = history.back();
    h.reachable = last.rtt.has_value() && *last.rtt <= config.probe_timeout;
  }
  bool first = true;
  for (const auto& s : history) {
    if (!s.rtt) continue;
    const double sample = static_cast<double>(*s.rtt);
    h.measured_rtt = first ? sample : config.rtt_weight * sample + (1.0 - config.rtt_weight) * h.measured_rtt;
    first = false;
  }
  const double per_second =
      static_cast<double>(utilization_bytes) * 1000.0 / static_cast<double>(std::max<SimTime>(1, config.utilization_window));
  const double available = static_cast<double>(config.link_bandwidth) - per_second;
  h.available_bandwidth = available <= 0.0 ? 0 : static_cast<std::uint64_t>(available);
  return h;
}

ProbeMonitor::ProbeMonitor(Fabric& fabric, AssessmentConfig config, AccountId account)
    : fabric_(fabric), config_(config), account_(account) {}

void ProbeMonitor::start(SimTime until) {
  until_ = until;
  const SimTime first = fabric_.kernel().now();
  if (first < until_) fabric_.kernel().schedule_at(first, "ric", "ProbeTimer", [this] { send_probe(); });
}

void ProbeMonitor::send_probe() {
  Kernel& kernel = fabric_.kernel();
  const SimTime now = kernel.now();
  const std::size_t slot = sent_.size();
  sent_.push_back(now);
  resolved_.push_back(false);
  ++outstanding_;

  fabric_.send(Hop::backhaul_up, "ric", "amf", "Probe", account_, [this, slot] {
    fabric_.send(Hop::backhaul_down, "amf", "ric", "ProbeAck", account_, [this, slot] {
      resolve(slot, fabric_.kernel().now() - sent_[slot]);
    });
  });
  kernel.schedule(config_.probe_timeout, "ric", "ProbeTimeout", [this, slot] { resolve(slot, std::nullopt); });

  if (now + config_.probe_interval < until_) {
    kernel.schedule(config_.probe_interval, "ric", "ProbeTimer", [this] { send_probe(); });
  }
}

void ProbeMonitor::resolve(std::size_t slot, std::optional<SimTime> rtt) {
  if (resolved_[slot]) return;
  if (rtt && *rtt > config_.probe_timeout) rtt.reset();
  resolved_[slot] = true;
  --outstanding_;
  history_.push_back(ProbeSample{sent_[slot], rtt});
  for (const auto& l : listeners_) l(history_.back());
}

}  // namespace ransim
