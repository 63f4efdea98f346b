#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "sensesim/event_queue.hpp"
#include "sensesim/medium.hpp"

using namespace sensesim;

TEST(Backoff, DrawStaysInWindow) {
  EdcaParams params;
  EdcaState s(params);
  RandomStream rng(7, 3);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) {
    const int v = s.draw_backoff(rng);
    ASSERT_GE(v, 0);
    ASSERT_LE(v, 15);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 16u);

  params.cw_min = 0;
  EdcaState zero(params);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(zero.draw_backoff(rng), 0);
}

TEST(Backoff, SeededStreamsRepeat) {
  EdcaState s(EdcaParams{});
  RandomStream a(42, 5), b(42, 5), c(42, 6);
  std::vector<int> xa, xb, xc;
  for (int i = 0; i < 50; ++i) {
    xa.push_back(s.draw_backoff(a));
    xb.push_back(s.draw_backoff(b));
    xc.push_back(s.draw_backoff(c));
  }
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
}

TEST(Backoff, ExponentialGrowthAndReset) {
  EdcaState s(EdcaParams{});
  const int expected[] = {31, 63, 127, 255, 511, 1023, 1023};
  for (int cw : expected) {
    s.on_collision();
    EXPECT_EQ(s.cw(), cw);
  }
  EXPECT_EQ(s.retries(), 7);
  s.on_collision();  // retry limit exceeded, frame dropped
  EXPECT_EQ(s.cw(), 15);
  EXPECT_EQ(s.retries(), 0);
  s.on_collision();
  s.on_success();
  EXPECT_EQ(s.cw(), 15);
  s.on_collision();
  s.reset();
  EXPECT_EQ(s.cw(), 15);
}

TEST(Contention, SingleContender) {
  std::vector<Contender> cs{{1, 100_us, 3}};
  auto out = resolve_contention(cs, 9_us);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->access_time, 127_us);
  EXPECT_EQ(out->winners, std::vector<StationId>{1});
  EXPECT_FALSE(out->collided());
}

TEST(Contention, TieCollides) {
  std::vector<Contender> cs{{1, 0_us, 2}, {2, 0_us, 2}};
  auto out = resolve_contention(cs, 9_us);
  ASSERT_TRUE(out);
  EXPECT_TRUE(out->collided());
  EXPECT_EQ(out->winners.size(), 2u);
  EdcaState a(EdcaParams{}), b(EdcaParams{});
  a.on_collision();
  b.on_collision();
  EXPECT_EQ(a.cw(), 31);
  EXPECT_EQ(b.cw(), 31);
}

TEST(Contention, LoserFreezes) {
  std::vector<Contender> cs{{1, 0_us, 1}, {2, 0_us, 4}};
  auto out = resolve_contention(cs, 9_us);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->winners, std::vector<StationId>{1});
  EXPECT_EQ(out->access_time, 9_us);
  EXPECT_EQ(cs[1].counter, 3);
  EXPECT_EQ(cs[1].count_start, 9_us);
  EXPECT_EQ(cs[1].expiry(9_us), 36_us);
}

TEST(Contention, LateStarterCountsOnlyItsOwnSlots) {
  // Station 2 starts counting after station 1 has already expired.
  std::vector<Contender> cs{{1, 0_us, 2}, {2, 50_us, 1}};
  auto out = resolve_contention(cs, 9_us);
  EXPECT_EQ(out->winners, std::vector<StationId>{1});
  EXPECT_EQ(cs[1].counter, 1);
  EXPECT_EQ(cs[1].count_start, 50_us);
}

TEST(Contention, EmptyHasNoOutcome) {
  std::vector<Contender> none;
  EXPECT_FALSE(resolve_contention(none, 9_us));
}

TEST(Contention, SlotsElapsed) {
  const Contender c{1, 100_us, 5};
  EXPECT_EQ(slots_elapsed(c, 50_us, 9_us), 0);
  EXPECT_EQ(slots_elapsed(c, 117_us, 9_us), 1);
  EXPECT_EQ(slots_elapsed(c, 1000_us, 9_us), 5);
}

TEST(Pifs, Grab) {
  EXPECT_EQ(pifs_grab(1000_us, 0_us, 25_us), 1025_us);
  EXPECT_EQ(pifs_grab(1000_us, 1300_us, 25_us), 1325_us);
  // Re-grab after a first TxOP ending at 2000 us.
  EXPECT_EQ(pifs_grab(2000_us, 2000_us, 25_us), 2025_us);
}

TEST(Txop, Packing) {
  const TxopRecord empty = hold_txop({}, 5484_us, 16_us);
  EXPECT_EQ(empty.occupied, Duration{});
  EXPECT_EQ(empty.exchanges_sent, 0u);
  EXPECT_FALSE(empty.unsendable);

  const std::vector<Duration> three{2000_us, 2000_us, 2000_us};
  const TxopRecord r = hold_txop(three, 5484_us, 16_us);
  EXPECT_EQ(r.exchanges_sent, 2u);
  EXPECT_EQ(r.occupied, 4016_us);

  const std::vector<Duration> big{6000_us};
  EXPECT_TRUE(hold_txop(big, 5484_us, 16_us).unsendable);

  const std::vector<Duration> exact{2734_us, 2734_us};
  EXPECT_EQ(hold_txop(exact, 5484_us, 16_us).occupied, 5484_us);
}

TEST(Txop, NeverExceedsLimit) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(1, 3000);
  for (int i = 0; i < 500; ++i) {
    std::vector<Duration> xs;
    for (int k = 0; k < 8; ++k) xs.push_back(Duration::from_us(d(rng)));
    EXPECT_LE(hold_txop(xs, 5484_us, 16_us).occupied, 5484_us);
  }
}

TEST(EventQueue, OrdersByTimeKindSubjectThenInsertion) {
  EventQueue q;
  q.push({10_us, EventKind::TxopEnd, 0, 1});
  q.push({10_us, EventKind::WindowOpen, 0, 2});
  q.push({5_us, EventKind::SimEnd, 0, 3});
  q.push({10_us, EventKind::BackoffExpiry, 4, 4});
  q.push({10_us, EventKind::BackoffExpiry, 2, 5});
  q.push({10_us, EventKind::BackoffExpiry, 2, 6});
  std::vector<std::uint64_t> tokens;
  while (!q.empty()) tokens.push_back(q.pop().token);
  EXPECT_EQ(tokens, (std::vector<std::uint64_t>{3, 2, 5, 6, 4, 1}));
}
