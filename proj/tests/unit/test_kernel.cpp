#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "ransim/sim/kernel.hpp"

using namespace ransim;

TEST(Kernel, SingleEventAdvancesClock) {
  Kernel k(1);
  SimTime seen = -1;
  k.schedule(5, "x", "tick", [&] { seen = k.now(); });
  EXPECT_EQ(k.run_until(10), 1u);
  EXPECT_EQ(seen, 5);
  EXPECT_EQ(k.now(), 10);
}

TEST(Kernel, SameTimeEventsFireInInsertionOrder) {
  Kernel k(1);
  std::vector<int> order;
  const EventId a = k.schedule(0, "x", "a", [&] { order.push_back(1); });
  const EventId b = k.schedule(0, "x", "b", [&] { order.push_back(2); });
  k.run_until(0);
  EXPECT_EQ(order, (std::vector<int>{1, 2}));
  EXPECT_EQ(a, 1u);
  EXPECT_EQ(b, 2u);
}

TEST(Kernel, NegativeDelayRejected) {
  Kernel k(1);
  EXPECT_THROW(k.schedule(-1, "x", "bad"), std::invalid_argument);
  k.run_until(100);
  EXPECT_THROW(k.schedule_at(50, "x", "past"), std::invalid_argument);
}

TEST(Kernel, ChainOfThreeEvents) {
  Kernel k(1);
  int fired = 0;
  k.schedule(1, "x", "e1", [&] {
    ++fired;
    k.schedule(1, "x", "e2", [&] {
      ++fired;
      k.schedule(1, "x", "e3", [&] { ++fired; });
    });
  });
  EXPECT_EQ(k.run_until(100), 3u);
  EXPECT_EQ(fired, 3);
}

TEST(Kernel, EventsAfterHorizonStayQueued) {
  Kernel k(1);
  k.schedule(50, "x", "late");
  EXPECT_EQ(k.run_until(49), 0u);
  EXPECT_EQ(k.pending(), 1u);
  EXPECT_EQ(k.run_until(50), 1u);
}

TEST(Kernel, TraceIsReproducible) {
  auto run = [] {
    Kernel k(42);
    k.set_tracing(true);
    auto rng = k.seeded_random("arrivals");
    for (int i = 0; i < 20; ++i) {
      k.schedule(static_cast<SimTime>(rng.uniform_below(100)), "ue-" + std::to_string(i), "arrive");
    }
    k.run_until(1000);
    return k.trace();
  };
  const auto a = run();
  EXPECT_EQ(a.size(), 20u);
  EXPECT_EQ(a, run());
}
