#include "ransim/ran/dos_filter.hpp"

namespace ransim {

void DosFilter::expire(std::deque<SimTime>& times, SimTime now) const {
  while (!times.empty() && times.front() <= now - config_.window) times.pop_front();
}

FilterVerdict DosFilter::check(const CachedId& id, bool known, SimTime now) {
  bool drop = false;
  if (!known) {
    expire(unknown_arrivals_, now);
    unknown_arrivals_.push_back(now);
    drop = unknown_arrivals_.size() > config_.unknown_threshold;
  }
  auto& mine = per_id_[id];
  expire(mine, now);
  mine.push_back(now);
  if (mine.size() > config_.retry_limit) drop = true;

  if (drop) {
    ++dropped_;
    return FilterVerdict::drop;
  }
  ++passed_;
  return FilterVerdict::pass;
}

}  // namespace ransim
