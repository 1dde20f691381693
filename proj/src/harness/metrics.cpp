#include "ransim/harness/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ransim {

SimTime nearest_rank(std::vector<SimTime> samples, double q) {
  if (samples.empty()) return 0;
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  auto rank = static_cast<std::size_t>(std::ceil(q / 100.0 * n));
  rank = std::clamp<std::size_t>(rank, 1, samples.size());
  return samples[rank - 1];
}

namespace {

LatencyStats latency_stats(const std::vector<SimTime>& samples) {
  return LatencyStats{samples.size(), nearest_rank(samples, 50), nearest_rank(samples, 95)};
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

Aggregates compute_aggregates(const std::vector<MetricsRow>& rows, std::vector<std::string> audit_flags) {
  Aggregates a;
  std::map<std::string, std::vector<SimTime>> by_path;
  std::vector<SimTime> all;
  for (const auto& r : rows) {
    const bool ok = r.outcome == Outcome::success;
    ++a.overall.attempts;
    auto& c = a.by_cohort[r.cohort];
    ++c.attempts;
    if (ok) {
      ++a.overall.successes;
      ++c.successes;
      by_path[std::string(to_string(r.path))].push_back(r.latency_ms);
      all.push_back(r.latency_ms);
    }
    a.total_backhaul_msgs += r.backhaul_msgs;
    a.total_backhaul_bytes += r.backhaul_bytes;
    if (r.outcome == Outcome::filtered) ++a.dropped_by_filter;
  }
  for (const auto& [path, samples] : by_path) a.latency_by_path[path] = latency_stats(samples);
  a.latency_overall = latency_stats(all);
  a.audit_flags = std::move(audit_flags);
  return a;
}

void write_csv(std::ostream& out, const std::vector<MetricsRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.scenario << ',' << r.design << ',' << r.seed << ',' << r.ue_id << ',' << to_string(r.outcome) << ','
        << to_string(r.path) << ',' << r.latency_ms << ',' << r.backhaul_msgs << ',' << r.backhaul_bytes << '\n';
  }
}

std::string to_csv(const std::vector<MetricsRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

void write_audit(std::ostream& out, const MetricsReport& report) {
  const auto& a = report.aggregates;
  out << "scenario," << report.scenario << '\n';
  out << "design," << to_string(report.design) << '\n';
  out << "seed," << report.seed << '\n';
  for (const auto& [host, level] : report.residency) {
    out << "resident," << to_string(host) << ',' << to_string(level) << '\n';
  }
  for (const auto& flag : a.audit_flags) out << "flag," << flag << '\n';
  out << std::fixed << std::setprecision(4);
  out << "success_rate," << a.overall.success_rate() << '\n';
  for (const auto& [cohort, c] : a.by_cohort) {
    out << "cohort," << cohort << ',' << c.successes << ',' << c.attempts << ',' << c.success_rate() << '\n';
  }
  for (const auto& [path, l] : a.latency_by_path) {
    out << "latency," << path << ',' << l.samples << ',' << l.p50 << ',' << l.p95 << '\n';
  }
  out << "backhaul_bytes," << a.total_backhaul_bytes << '\n';
  out << "link_bytes," << report.link_bytes << '\n';
  for (const auto& [label, bytes] : report.background_bytes) out << "background," << label << ',' << bytes << '\n';
  out << "dropped_by_filter," << a.dropped_by_filter << '\n';
}

void write_comparison(std::ostream& out, const std::vector<MetricsReport>& reports) {
  out << "design,success_rate,p95_latency_ms,backhaul_bytes,audit_flags\n";
  out << std::fixed << std::setprecision(4);
  for (const auto& r : reports) {
    const auto& a = r.aggregates;
    out << to_string(r.design) << ',' << a.overall.success_rate() << ',' << a.latency_overall.p95 << ','
        << r.link_bytes << ',' << join(a.audit_flags, ';') << '\n';
  }
}

}  // namespace ransim
