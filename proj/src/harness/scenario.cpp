#include "ransim/harness/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ransim {

using nlohmann::json;

std::string_view to_string(PrewarmKind kind) noexcept {
  switch (kind) {
    case PrewarmKind::decision: return "decision";
    case PrewarmKind::state: return "state";
    case PrewarmKind::both: return "both";
  }
  return "?";
}

int exit_code_for(const Error& error) noexcept {
  switch (error.code()) {
    case ErrorCode::parse_error:
    case ErrorCode::validation_error:
    case ErrorCode::invalid_budget:
      return 2;
    default:
      return 1;
  }
}

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::validation_error, field + ": " + why);
}

std::string join_path(const std::string& base, std::string_view key) {
  return base.empty() ? std::string(key) : base + "." + std::string(key);
}

class Reader {
 public:
  Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) invalid(path_.empty() ? "scenario" : path_, "expected an object");
  }

  void allow(std::initializer_list<std::string_view> keys) const {
    const std::set<std::string_view> allowed(keys);
    for (const auto& [k, v] : node_.items()) {
      if (!allowed.contains(k)) invalid(join_path(path_, k), "unknown field");
    }
  }

  bool has(std::string_view key) const { return node_.contains(std::string(key)); }

  template <class T>
  void read(std::string_view key, T& out) const {
    const auto it = node_.find(std::string(key));
    if (it == node_.end()) return;
    convert(*it, join_path(path_, key), out);
  }

  template <class T>
  T require(std::string_view key) const {
    if (!has(key)) invalid(join_path(path_, key), "required");
    T out{};
    read(key, out);
    return out;
  }

  Reader child(std::string_view key) const { return Reader(node_.at(std::string(key)), join_path(path_, key)); }
  const json& raw(std::string_view key) const { return node_.at(std::string(key)); }
  const std::string& path() const { return path_; }

 private:
  static void convert(const json& v, const std::string& field, std::string& out) {
    if (!v.is_string()) invalid(field, "expected a string");
    out = v.get<std::string>();
  }
  static void convert(const json& v, const std::string& field, bool& out) {
    if (!v.is_boolean()) invalid(field, "expected true or false");
    out = v.get<bool>();
  }
  static void convert(const json& v, const std::string& field, double& out) {
    if (!v.is_number()) invalid(field, "expected a number");
    out = v.get<double>();
  }
  static void convert(const json& v, const std::string& field, std::int64_t& out) {
    if (!v.is_number_integer()) invalid(field, "expected an integer");
    out = v.get<std::int64_t>();
  }
  static void convert(const json& v, const std::string& field, std::uint64_t& out) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) invalid(field, "expected a non-negative integer");
    out = v.get<std::uint64_t>();
  }
  static void convert(const json& v, const std::string& field, std::set<std::string>& out) {
    if (!v.is_array()) invalid(field, "expected an array of strings");
    out.clear();
    for (const auto& e : v) {
      if (!e.is_string()) invalid(field, "expected an array of strings");
      out.insert(e.get<std::string>());
    }
  }

  const json& node_;
  std::string path_;
};

BackhaulProfile read_link(const Reader& r, BackhaulProfile defaults) {
  r.allow({"base_latency_ms", "jitter_ms", "bandwidth_bytes_per_s", "loss_probability", "outages"});
  BackhaulProfile p = std::move(defaults);
  r.read("base_latency_ms", p.base_latency);
  r.read("jitter_ms", p.jitter);
  r.read("bandwidth_bytes_per_s", p.bandwidth);
  r.read("loss_probability", p.loss_probability);
  if (r.has("outages")) {
    const std::string field = join_path(r.path(), "outages");
    const json& list = r.raw("outages");
    if (!list.is_array()) invalid(field, "expected an array of [start, end] pairs");
    p.outages.clear();
    for (const auto& pair : list) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        invalid(field, "expected an array of [start, end] pairs");
      }
      p.outages.push_back(OutageInterval{pair[0].get<SimTime>(), pair[1].get<SimTime>()});
    }
  }
  try {
    p.validate();
  } catch (const Error& e) {
    invalid(r.path(), e.what());
  }
  return p;
}

QosClass parse_qos(const std::string& s, const std::string& field) {
  if (s == "low-latency") return QosClass::low_latency;
  if (s == "best-effort") return QosClass::best_effort;
  invalid(field, "expected low-latency or best-effort");
}

ArrivalSpec read_arrival(const Reader& r) {
  r.allow({"kind", "at_ms", "spacing_ms", "rate_per_s", "burst_size", "tail_rate_per_s"});
  ArrivalSpec a;
  const auto kind = r.require<std::string>("kind");
  const auto parsed = parse_arrival_kind(kind);
  if (!parsed) invalid(join_path(r.path(), "kind"), "unknown arrival kind '" + kind + "'");
  a.kind = *parsed;
  r.read("at_ms", a.at_ms);
  r.read("spacing_ms", a.spacing_ms);
  r.read("rate_per_s", a.rate_per_s);
  std::uint64_t burst = 0;
  r.read("burst_size", burst);
  a.burst_size = burst;
  r.read("tail_rate_per_s", a.tail_rate_per_s);
  return a;
}

PopulationConfig read_population(const Reader& r) {
  r.allow({"name", "count", "behavior", "express_eligible", "provisioned", "home_network", "slice", "service", "subscription",
           "period_ms", "hold_ms", "arrival"});
  PopulationConfig p;
  p.name = r.require<std::string>("name");
  p.count = r.require<std::uint64_t>("count");
  const auto behavior = r.require<std::string>("behavior");
  const auto parsed = parse_behavior(behavior);
  if (!parsed) invalid(join_path(r.path(), "behavior"), "unknown behavior '" + behavior + "'");
  p.behavior = *parsed;
  r.read("express_eligible", p.express_eligible);
  r.read("provisioned", p.provisioned);
  r.read("home_network", p.home_network);
  r.read("slice", p.slice);
  r.read("service", p.service);
  r.read("period_ms", p.period_ms);
  r.read("hold_ms", p.hold_ms);
  if (r.has("subscription")) {
    const Reader s = r.child("subscription");
    s.allow({"slices", "services", "qos"});
    s.read("slices", p.subscription.allowed_slices);
    s.read("services", p.subscription.authorized_services);
    std::string qos = "best-effort";
    s.read("qos", qos);
    p.subscription.qos_class = parse_qos(qos, join_path(s.path(), "qos"));
  } else {
    p.subscription.allowed_slices = {p.slice};
    p.subscription.authorized_services = {p.service};
  }
  if (!r.has("arrival")) invalid(join_path(r.path(), "arrival"), "required");
  p.arrival = read_arrival(r.child("arrival"));
  return p;
}

int line_of(std::string_view text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

const PopulationConfig* ScenarioConfig::population(std::string_view name) const {
  for (const auto& p : populations) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

void ScenarioConfig::validate() const {
  if (name.empty()) invalid("name", "must not be empty");
  if (horizon_ms <= 0) invalid("horizon_ms", "must be > 0");
  if (serving_network.empty()) invalid("serving_network", "must not be empty");
  try {
    backhaul.validate();
  } catch (const Error& e) {
    invalid("backhaul", e.what());
  }
  try {
    home_link.validate();
  } catch (const Error& e) {
    invalid("home_link", e.what());
  }
  if (radio_latency_ms < 0) invalid("radio_latency_ms", "must be >= 0");
  if (core_hop_latency_ms < 0) invalid("core_hop_latency_ms", "must be >= 0");
  if (request_timeout_ms <= 0) invalid("request_timeout_ms", "must be > 0");
  if (reauth_interval_ms <= 0) invalid("reauth_interval_ms", "must be > 0");
  if (default_message_bytes == 0) invalid("message_bytes.default", "must be > 0");
  for (const auto& [type, size] : message_bytes) {
    if (size == 0) invalid("message_bytes." + type, "must be > 0");
  }

  std::set<std::string> names;
  for (std::size_t i = 0; i < populations.size(); ++i) {
    const auto& p = populations[i];
    const std::string at = "populations[" + std::to_string(i) + "]";
    if (p.name.empty()) invalid(at + ".name", "must not be empty");
    if (!names.insert(p.name).second) invalid(at + ".name", "duplicate population '" + p.name + "'");
    if (p.behavior == Behavior::periodic_sensor) {
      if (p.period_ms <= 0) invalid(at + ".period_ms", "must be > 0 for periodic-sensor");
      if (p.hold_ms < 0 || p.hold_ms >= p.period_ms) invalid(at + ".hold_ms", "must lie in [0, period_ms)");
    }
    if (p.behavior != Behavior::attacker_flood && p.subscription.allowed_slices.empty()) {
      invalid(at + ".subscription.slices", "must not be empty");
    }
    if (p.behavior == Behavior::attacker_flood && p.express_eligible) {
      invalid(at + ".express_eligible", "attackers cannot be express eligible");
    }
    const auto& a = p.arrival;
    if (a.at_ms < 0) invalid(at + ".arrival.at_ms", "must be >= 0");
    if (a.spacing_ms < 0) invalid(at + ".arrival.spacing_ms", "must be >= 0");
    if ((a.kind == ArrivalKind::poisson || a.kind == ArrivalKind::rate) && a.rate_per_s <= 0) {
      invalid(at + ".arrival.rate_per_s", "must be > 0");
    }
    if (a.kind == ArrivalKind::burst && a.burst_size < p.count && a.tail_rate_per_s <= 0) {
      invalid(at + ".arrival.tail_rate_per_s", "must be > 0 when the burst does not cover the population");
    }
  }

  for (std::size_t i = 0; i < prewarm.size(); ++i) {
    const auto& w = prewarm[i];
    const std::string at = "prewarm[" + std::to_string(i) + "]";
    if (w.ttl_ms <= 0) invalid(at + ".ttl_ms", "must be > 0");
    const auto* p = population(w.population);
    if (p == nullptr) invalid(at + ".population", "unknown population '" + w.population + "'");
    if (p->behavior == Behavior::attacker_flood || !p->provisioned) {
      invalid(at + ".population", "only provisioned subscribers can be pre-warmed");
    }
  }

  if (dos.window <= 0) invalid("thresholds.dos_window_ms", "must be > 0");
  if (dos.retry_limit == 0) invalid("thresholds.dos_retry_limit", "must be > 0");
  if (!(bandwidth_fraction >= 0.0 && bandwidth_fraction <= 1.0)) {
    invalid("thresholds.bandwidth_fraction", "must lie in [0, 1]");
  }
  if (probe_interval_ms <= 0) invalid("thresholds.probe_interval_ms", "must be > 0");
  if (probe_timeout_ms <= 0) invalid("thresholds.probe_timeout_ms", "must be > 0");
  if (utilization_window_ms <= 0) invalid("thresholds.utilization_window_ms", "must be > 0");
  if (probationary.enabled && probationary.slice.empty()) invalid("probationary.slice", "must not be empty");
  if (cache_capacity == 0) invalid("cache.capacity", "must be > 0");
  if (capture_ttl_ms <= 0) invalid("cache.capture_ttl_ms", "must be > 0");

  const std::pair<const char*, SimTime> delays[] = {
      {"triage", xapp_delays.triage},           {"express", xapp_delays.express},
      {"auth_proxy", xapp_delays.auth_proxy},   {"policy_proxy", xapp_delays.policy_proxy},
      {"session_proxy", xapp_delays.session_proxy}, {"probationary", xapp_delays.probationary},
      {"monitor", xapp_delays.monitor}};
  for (const auto& [name, delay] : delays) {
    try {
      validate_budget(delay);
    } catch (const Error& e) {
      throw Error(ErrorCode::invalid_budget, std::string("xapp_delays_ms.") + name + ": " + e.what());
    }
  }
}

ScenarioConfig parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error,
                "parse error at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }

  const Reader r(doc, "");
  r.allow({"name", "seed", "horizon_ms", "design", "serving_network", "backhaul", "home_link", "radio_latency_ms",
           "core_hop_latency_ms", "request_timeout_ms", "reauth_interval_ms", "message_bytes", "populations",
           "prewarm", "thresholds", "probationary", "xapp_delays_ms", "cache"});

  ScenarioConfig c;
  r.read("name", c.name);
  r.read("seed", c.seed);
  r.read("horizon_ms", c.horizon_ms);
  if (r.has("design")) {
    const auto name = r.require<std::string>("design");
    const auto d = parse_design(name);
    if (!d) invalid("design", "unknown design '" + name + "'");
    c.design = *d;
  }
  r.read("serving_network", c.serving_network);
  if (r.has("backhaul")) c.backhaul = read_link(r.child("backhaul"), c.backhaul);
  c.home_link.base_latency = 20;
  if (r.has("home_link")) c.home_link = read_link(r.child("home_link"), c.home_link);
  r.read("radio_latency_ms", c.radio_latency_ms);
  r.read("core_hop_latency_ms", c.core_hop_latency_ms);
  r.read("request_timeout_ms", c.request_timeout_ms);
  r.read("reauth_interval_ms", c.reauth_interval_ms);

  if (r.has("message_bytes")) {
    const json& m = r.raw("message_bytes");
    if (!m.is_object()) invalid("message_bytes", "expected an object");
    for (const auto& [type, v] : m.items()) {
      if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) invalid("message_bytes." + type, "must be > 0");
      if (type == "default") {
        c.default_message_bytes = v.get<std::uint64_t>();
      } else {
        c.message_bytes[type] = v.get<std::uint64_t>();
      }
    }
  }

  if (r.has("populations")) {
    const json& list = r.raw("populations");
    if (!list.is_array()) invalid("populations", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      c.populations.push_back(read_population(Reader(list[i], "populations[" + std::to_string(i) + "]")));
    }
  }

  if (r.has("prewarm")) {
    const json& list = r.raw("prewarm");
    if (!list.is_array()) invalid("prewarm", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Reader w(list[i], "prewarm[" + std::to_string(i) + "]");
      w.allow({"population", "kind", "ttl_ms"});
      PrewarmConfig p;
      p.population = w.require<std::string>("population");
      std::string kind = "both";
      w.read("kind", kind);
      if (kind == "decision") p.kind = PrewarmKind::decision;
      else if (kind == "state") p.kind = PrewarmKind::state;
      else if (kind == "both") p.kind = PrewarmKind::both;
      else invalid(w.path() + ".kind", "expected decision, state or both");
      w.read("ttl_ms", p.ttl_ms);
      c.prewarm.push_back(std::move(p));
    }
  }

  if (r.has("thresholds")) {
    const Reader t = r.child("thresholds");
    t.allow({"dos_filter", "dos_window_ms", "dos_unknown_threshold", "dos_retry_limit", "bandwidth_fraction",
             "probe_interval_ms", "probe_timeout_ms", "utilization_window_ms"});
    t.read("dos_filter", c.dos_filter);
    t.read("dos_window_ms", c.dos.window);
    std::uint64_t n = c.dos.unknown_threshold;
    t.read("dos_unknown_threshold", n);
    c.dos.unknown_threshold = n;
    n = c.dos.retry_limit;
    t.read("dos_retry_limit", n);
    c.dos.retry_limit = n;
    t.read("bandwidth_fraction", c.bandwidth_fraction);
    t.read("probe_interval_ms", c.probe_interval_ms);
    t.read("probe_timeout_ms", c.probe_timeout_ms);
    t.read("utilization_window_ms", c.utilization_window_ms);
  }

  if (r.has("probationary")) {
    const Reader p = r.child("probationary");
    p.allow({"enabled", "slice", "services"});
    p.read("enabled", c.probationary.enabled);
    p.read("slice", c.probationary.slice);
    p.read("services", c.probationary.services);
  }

  if (r.has("xapp_delays_ms")) {
    const Reader x = r.child("xapp_delays_ms");
    x.allow({"triage", "express", "auth_proxy", "policy_proxy", "session_proxy", "probationary", "monitor"});
    x.read("triage", c.xapp_delays.triage);
    x.read("express", c.xapp_delays.express);
    x.read("auth_proxy", c.xapp_delays.auth_proxy);
    x.read("policy_proxy", c.xapp_delays.policy_proxy);
    x.read("session_proxy", c.xapp_delays.session_proxy);
    x.read("probationary", c.xapp_delays.probationary);
    x.read("monitor", c.xapp_delays.monitor);
  }

  if (r.has("cache")) {
    const Reader k = r.child("cache");
    k.allow({"capacity", "capture_ttl_ms"});
    std::uint64_t cap = c.cache_capacity;
    k.read("capacity", cap);
    c.cache_capacity = cap;
    k.read("capture_ttl_ms", c.capture_ttl_ms);
  }

  c.validate();
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::validation_error, "scenario: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace ransim
