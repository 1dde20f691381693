#include "ransim/harness/presets.hpp"

#include <filesystem>

namespace ransim {

namespace {

// Outage covers every arrival and every timeout of the run.
constexpr std::string_view kDisaster = R"json({
  "name": "disaster",
  "seed": 1,
  "horizon_ms": 60000,
  "design": "logic-replication",
  "serving_network": "mnc001.mcc001.3gppnetwork.org",
  "backhaul": {"base_latency_ms": 10, "bandwidth_bytes_per_s": 1250000, "outages": [[0, 100000]]},
  "home_link": {"base_latency_ms": 20, "bandwidth_bytes_per_s": 1250000},
  "request_timeout_ms": 10000,
  "populations": [
    {"name": "sensors", "count": 20, "behavior": "periodic-sensor", "express_eligible": true,
     "period_ms": 20000, "hold_ms": 5000, "slice": "miot", "service": "telemetry",
     "subscription": {"slices": ["miot"], "services": ["telemetry"], "qos": "best-effort"},
     "arrival": {"kind": "fixed", "at_ms": 5000, "spacing_ms": 100}},
    {"name": "responders", "count": 20, "behavior": "interactive", "slice": "urllc", "service": "voice",
     "subscription": {"slices": ["urllc", "embb"], "services": ["voice", "video", "messaging"], "qos": "low-latency"},
     "arrival": {"kind": "fixed", "at_ms": 6000, "spacing_ms": 100}},
    {"name": "locals", "count": 20, "behavior": "interactive",
     "subscription": {"slices": ["embb"], "services": ["web", "messaging"]},
     "arrival": {"kind": "fixed", "at_ms": 7000, "spacing_ms": 100}},
    {"name": "roamers", "count": 10, "behavior": "roamer", "home_network": "mnc002.mcc002.3gppnetwork.org",
     "subscription": {"slices": ["embb"], "services": ["web", "messaging", "voice"]},
     "arrival": {"kind": "fixed", "at_ms": 8000, "spacing_ms": 100}}
  ],
  "prewarm": [
    {"population": "sensors", "kind": "both", "ttl_ms": 3600000},
    {"population": "responders", "kind": "state", "ttl_ms": 3600000}
  ]
})json";

// 1000 attackers at 1000 req/s against 50 cached subscribers.
constexpr std::string_view kFlashCrowd = R"json({
  "name": "flash_crowd",
  "seed": 1,
  "horizon_ms": 30000,
  "design": "logic-replication",
  "serving_network": "mnc001.mcc001.3gppnetwork.org",
  "backhaul": {"base_latency_ms": 10, "bandwidth_bytes_per_s": 32000},
  "request_timeout_ms": 10000,
  "populations": [
    {"name": "legit", "count": 50, "behavior": "interactive",
     "subscription": {"slices": ["embb"], "services": ["web", "messaging"]},
     "arrival": {"kind": "poisson", "at_ms": 10000, "rate_per_s": 10}},
    {"name": "attackers", "count": 1000, "behavior": "attacker-flood",
     "arrival": {"kind": "rate", "at_ms": 10000, "rate_per_s": 1000}}
  ],
  "prewarm": [{"population": "legit", "kind": "state", "ttl_ms": 3600000}],
  "thresholds": {"dos_filter": true, "dos_window_ms": 1000, "dos_unknown_threshold": 50, "dos_retry_limit": 5}
})json";

// Satellite backhaul: 600 ms one way, 1 Mbit/s.
constexpr std::string_view kNtn = R"json({
  "name": "ntn",
  "seed": 1,
  "horizon_ms": 60000,
  "design": "decision-cache",
  "serving_network": "mnc001.mcc001.3gppnetwork.org",
  "backhaul": {"base_latency_ms": 600, "bandwidth_bytes_per_s": 125000},
  "request_timeout_ms": 20000,
  "populations": [
    {"name": "express", "count": 10, "behavior": "interactive", "express_eligible": true,
     "subscription": {"slices": ["embb"], "services": ["web"]},
     "arrival": {"kind": "fixed", "at_ms": 1000, "spacing_ms": 500}},
    {"name": "standard", "count": 10, "behavior": "interactive",
     "subscription": {"slices": ["embb"], "services": ["web"]},
     "arrival": {"kind": "fixed", "at_ms": 10000, "spacing_ms": 5000}}
  ],
  "prewarm": [{"population": "express", "kind": "decision", "ttl_ms": 3600000}]
})json";

// Continuous verification: every session re-authenticates every 10 s.
constexpr std::string_view kZta = R"json({
  "name": "zta",
  "seed": 1,
  "horizon_ms": 120000,
  "design": "logic-replication",
  "serving_network": "mnc001.mcc001.3gppnetwork.org",
  "backhaul": {"base_latency_ms": 10, "bandwidth_bytes_per_s": 1250000},
  "reauth_interval_ms": 10000,
  "populations": [
    {"name": "workers", "count": 50, "behavior": "interactive",
     "subscription": {"slices": ["embb"], "services": ["web", "messaging"]},
     "arrival": {"kind": "poisson", "at_ms": 1000, "rate_per_s": 5}},
    {"name": "sensors", "count": 10, "behavior": "periodic-sensor", "express_eligible": true,
     "period_ms": 30000, "hold_ms": 25000, "slice": "miot", "service": "telemetry",
     "subscription": {"slices": ["miot"], "services": ["telemetry"]},
     "arrival": {"kind": "fixed", "at_ms": 2000, "spacing_ms": 200}}
  ],
  "prewarm": [{"population": "sensors", "kind": "both", "ttl_ms": 3600000}]
})json";

struct Preset {
  std::string_view name;
  std::string_view json;
};

constexpr Preset kPresets[] = {
    {"disaster", kDisaster},
    {"flash_crowd", kFlashCrowd},
    {"ntn", kNtn},
    {"zta", kZta},
};

}  // namespace

std::vector<std::string_view> preset_names() {
  std::vector<std::string_view> out;
  for (const auto& p : kPresets) out.push_back(p.name);
  return out;
}

std::optional<std::string_view> preset_json(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p.json;
  }
  return std::nullopt;
}

ScenarioConfig load_preset(std::string_view name) {
  const auto json = preset_json(name);
  if (!json) throw Error(ErrorCode::validation_error, "scenario: unknown preset '" + std::string(name) + "'");
  return parse_scenario(*json);
}

ScenarioConfig resolve_scenario(const std::string& file_or_preset) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(file_or_preset, ec)) return load_scenario(file_or_preset);
  if (preset_json(file_or_preset)) return load_preset(file_or_preset);
  throw Error(ErrorCode::validation_error,
              "scenario: '" + file_or_preset + "' is neither a readable file nor a preset name");
}

}  // namespace ransim
