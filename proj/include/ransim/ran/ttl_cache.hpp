#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ransim/common.hpp"
#include "ransim/protocol.hpp"

namespace ransim {

enum class LookupStatus { hit, miss, expired };

template <class Entry>
struct LookupResult {
  LookupStatus status = LookupStatus::miss;
  const Entry* entry = nullptr;

  bool hit() const noexcept { return status == LookupStatus::hit; }
};

/// Per-UE cache keyed by cached id. An entry is live iff
/// now < created_at + ttl. When full, the entry with the earliest expiry
/// (then the smallest key) is evicted.
///
/// Entry must provide key(), expires_at() and handles(RequestType).
template <class Entry>
class TtlCache {
 public:
  static constexpr std::size_t kDefaultCapacity = 10'000;

  explicit TtlCache(std::size_t capacity = kDefaultCapacity) : capacity_(capacity == 0 ? 1 : capacity) {}

  /// Replaces any entry for the same UE. Returns the number of entries
  /// evicted to make room.
  std::size_t store(Entry entry) {
    const CachedId key = entry.key();
    erase(key);
    std::size_t evicted = 0;
    while (entries_.size() >= capacity_) {
      const auto victim = by_expiry_.begin()->second;
      erase(victim);
      ++evicted;
    }
    by_expiry_.emplace(entry.expires_at(), key);
    entries_.emplace(key, std::move(entry));
    return evicted;
  }

  /// Expired entries are evicted on the way out.
  LookupResult<Entry> lookup(const CachedId& id, SimTime now) {
    const auto it = entries_.find(id);
    if (it == entries_.end()) return {};
    if (now >= it->second.expires_at()) {
      erase(id);
      return {LookupStatus::expired, nullptr};
    }
    return {LookupStatus::hit, &it->second};
  }

  /// Hit only if the live entry carries decisions for `type`.
  LookupResult<Entry> lookup(const CachedId& id, RequestType type, SimTime now) {
    auto r = lookup(id, now);
    if (r.hit() && !r.entry->handles(type)) return {};
    return r;
  }

  /// Non-mutating liveness probe.
  bool live(const CachedId& id, SimTime now) const {
    const auto it = entries_.find(id);
    return it != entries_.end() && now < it->second.expires_at();
  }

  bool erase(const CachedId& id) {
    const auto it = entries_.find(id);
    if (it == entries_.end()) return false;
    by_expiry_.erase({it->second.expires_at(), id});
    entries_.erase(it);
    return true;
  }

  std::size_t purge_expired(SimTime now) {
    std::size_t n = 0;
    while (!by_expiry_.empty() && by_expiry_.begin()->first <= now) {
      erase(by_expiry_.begin()->second);
      ++n;
    }
    return n;
  }

  /// Live entries in key order.
  std::vector<std::reference_wrapper<const Entry>> live_entries(SimTime now) const {
    std::vector<std::reference_wrapper<const Entry>> out;
    for (const auto& [key, entry] : entries_) {
      if (now < entry.expires_at()) out.emplace_back(entry);
    }
    return out;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }

 private:
  std::size_t capacity_;
  std::map<CachedId, Entry> entries_;
  std::set<std::pair<SimTime, CachedId>> by_expiry_;
};

}  // namespace ransim
