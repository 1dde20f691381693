#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ransim/crypto/residency.hpp"
#include "ransim/protocol.hpp"
#include "ransim/ran/ric.hpp"

namespace ransim {

/// One registration attempt.
struct MetricsRow {
  std::string scenario;
  std::string design;
  std::uint64_t seed = 0;
  std::string ue_id;
  std::string cohort;
  Outcome outcome = Outcome::timeout;
  RoutingDecision path = RoutingDecision::standard;
  SimTime latency_ms = 0;  // attempt start to outcome
  std::uint64_t backhaul_msgs = 0;
  std::uint64_t backhaul_bytes = 0;

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct CohortStats {
  std::uint64_t attempts = 0;
  std::uint64_t successes = 0;

  double success_rate() const noexcept {
    return attempts == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(attempts);
  }

  friend bool operator==(const CohortStats&, const CohortStats&) = default;
};

struct LatencyStats {
  std::uint64_t samples = 0;
  SimTime p50 = 0;
  SimTime p95 = 0;

  friend bool operator==(const LatencyStats&, const LatencyStats&) = default;
};

/// Everything here is a function of the rows plus the audit flags.
struct Aggregates {
  CohortStats overall;
  std::map<std::string, CohortStats> by_cohort;
  /// Successful attempts only, keyed by path name.
  std::map<std::string, LatencyStats> latency_by_path;
  LatencyStats latency_overall;
  std::uint64_t total_backhaul_msgs = 0;
  std::uint64_t total_backhaul_bytes = 0;
  std::uint64_t dropped_by_filter = 0;
  std::vector<std::string> audit_flags;

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

/// Nearest-rank percentile, `q` in (0, 100]. Returns 0 for no samples.
SimTime nearest_rank(std::vector<SimTime> samples, double q);

Aggregates compute_aggregates(const std::vector<MetricsRow>& rows, std::vector<std::string> audit_flags);

struct MetricsReport {
  std::string scenario;
  Design design = Design::baseline;
  std::uint64_t seed = 0;
  std::vector<MetricsRow> rows;
  Aggregates aggregates;

  /// Every byte the backhaul carried, including probes, re-authentication
  /// and deferred authentication.
  std::uint64_t link_bytes = 0;
  std::uint64_t link_messages = 0;
  std::map<std::string, std::uint64_t> background_bytes;  // by account label

  std::vector<std::pair<HostClass, KeyLevel>> residency;
  std::vector<AccessLogEntry> access_log;
  /// UE ids holding a live entry when the run ended.
  std::vector<std::string> decision_cached;
  std::vector<std::string> state_cached;

  std::string trace;     // filled when requested
  std::string snapshot;  // filled when requested
};

inline constexpr const char* kCsvHeader =
    "scenario,design,seed,ue_id,outcome,path,latency_ms,backhaul_msgs,backhaul_bytes";

void write_csv(std::ostream& out, const std::vector<MetricsRow>& rows);
std::string to_csv(const std::vector<MetricsRow>& rows);

/// Residency entries, edge-exposure flags and the aggregate block.
void write_audit(std::ostream& out, const MetricsReport& report);

/// design,success_rate,p95_latency_ms,backhaul_bytes,audit_flags
void write_comparison(std::ostream& out, const std::vector<MetricsReport>& reports);

}  // namespace ransim
