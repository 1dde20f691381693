#include "ransim/sim/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace ransim {

EventId Kernel::schedule(SimTime delay, EntityId target, std::string label, Handler handler) {
  if (delay < 0) throw std::invalid_argument("schedule: negative delay");
  return schedule_at(now_ + delay, std::move(target), std::move(label), std::move(handler));
}

EventId Kernel::schedule_at(SimTime at, EntityId target, std::string label, Handler handler) {
  if (at < now_) throw std::invalid_argument("schedule_at: time is in the past");
  const EventId id = next_id_++;
  queue_.push_back(Event{at, id, std::move(target), std::move(label), std::move(handler)});
  std::push_heap(queue_.begin(), queue_.end(), Later{});
  return id;
}

std::size_t Kernel::run_until(SimTime t_end) {
  if (t_end < now_) throw std::invalid_argument("run_until: t_end precedes current time");
  std::size_t processed = 0;
  while (!queue_.empty() && queue_.front().fire_time <= t_end) {
    std::pop_heap(queue_.begin(), queue_.end(), Later{});
    Event ev = std::move(queue_.back());
    queue_.pop_back();

    now_ = ev.fire_time;
    if (tracing_) trace_.push_back(TraceRecord{ev.fire_time, ev.sequence, ev.target, ev.label});
    if (ev.handler) ev.handler();
    ++processed;
  }
  now_ = t_end;
  return processed;
}

}  // namespace ransim
