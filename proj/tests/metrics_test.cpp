#include <gtest/gtest.h>

#include "sensesim/metrics.hpp"

using namespace sensesim;

namespace {

SawWindowLedger window(WindowClass c, Duration available) {
  SawWindowLedger l;
  l.classification = c;
  l.available_sensing = available;
  return l;
}

}  // namespace

TEST(Pso, Arithmetic) {
  MetricsAccumulator m;
  m.set_sim_time(100000_us);
  EXPECT_DOUBLE_EQ(m.pso(), 0.0);
  m.add_sensing_airtime(5000_us);
  EXPECT_DOUBLE_EQ(m.pso(), 5.0);
  EXPECT_THROW(MetricsAccumulator{}.pso(), MetricsError);
}

TEST(Psm, Arithmetic) {
  MetricsAccumulator m;
  EXPECT_THROW(m.psm(), MetricsError);
  for (int i = 0; i < 3; ++i) m.add_window(window(WindowClass::Complete, 12700_us), 12700_us);
  EXPECT_DOUBLE_EQ(m.psm(), 0.0);
  m.add_window(window(WindowClass::PartiallyMissed, 12700_us), 12700_us);
  EXPECT_DOUBLE_EQ(m.psm(), 25.0);
  m.add_window(window(WindowClass::CompletelyMissed, 12700_us), 12700_us);
  EXPECT_DOUBLE_EQ(m.psm(), 40.0);
  EXPECT_EQ(m.count(WindowClass::Complete), 3);
  EXPECT_EQ(m.window_count(), 5);
}

TEST(Throughput, Arithmetic) {
  MetricsAccumulator m;
  EXPECT_DOUBLE_EQ(m.throughput_bps(), 0.0);
  m.set_sim_time(Duration::from_ns(2'000'000'000));
  EXPECT_DOUBLE_EQ(m.throughput_bps(), 0.0);
  m.add_data_bits(240000);
  EXPECT_DOUBLE_EQ(m.throughput_bps(), 120000.0);
}

TEST(Pawd, AveragesPerWindow) {
  MetricsAccumulator m;
  EXPECT_THROW(m.pawd(), MetricsError);
  m.add_window(window(WindowClass::Complete, 12700_us), 12700_us);
  m.add_window(window(WindowClass::CompletelyMissed, Duration{}), 12700_us);
  EXPECT_DOUBLE_EQ(m.pawd(), 50.0);
}

TEST(Partition, Total) {
  MetricsAccumulator m;
  m.add_idle(1_us);
  m.add_contention(2_us);
  m.add_data_airtime(3_us);
  m.add_sensing_airtime(4_us);
  m.add_collision(5_us);
  EXPECT_EQ(m.partition().total(), 15_us);
  EXPECT_EQ(m.sensing_airtime(), 4_us);
}
