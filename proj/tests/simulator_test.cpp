#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "sensesim/simulator.hpp"

using namespace sensesim;

namespace {

SimParams params(AccessMethod access, int n_sta, int saw, double seconds = 5, std::uint64_t seed = 1) {
  SimParams p;
  p.access_method = access;
  p.n_sta = n_sta;
  p.saw_duration_code = saw;
  p.sim_duration_s = seconds;
  p.rng_seed = seed;
  return p;
}

struct Recorded {
  std::vector<Frame> ok;
  std::vector<Frame> collided;
  std::vector<SawWindowLedger> windows;
  RunResult result;
};

Recorded record(const SimParams& p) {
  Recorded r;
  RunOptions opt;
  opt.on_frame = [&r](const Frame& f, bool collided) { (collided ? r.collided : r.ok).push_back(f); };
  opt.on_window = [&r](const SawWindowLedger& l) { r.windows.push_back(l); };
  r.result = simulate(p, opt);
  return r;
}

}  // namespace

TEST(Simulator, PartitionCoversRunExactly) {
  for (auto access : {AccessMethod::EdcaAccess, AccessMethod::PifsAccess, AccessMethod::NoSensing}) {
    for (int n : {1, 5, 16}) {
      for (int saw : {10, 127}) {
        const RunResult r = simulate(params(access, n, saw, 3.3));
        EXPECT_EQ(r.metrics.partition().total(), r.metrics.sim_time()) << to_string(access) << ' ' << n << ' ' << saw;
      }
    }
  }
}

TEST(Simulator, SuccessfulFramesNeverOverlap) {
  for (auto access : {AccessMethod::EdcaAccess, AccessMethod::PifsAccess}) {
    const Recorded r = record(params(access, 10, 50));
    ASSERT_FALSE(r.ok.empty());
    for (std::size_t i = 1; i < r.ok.size(); ++i) {
      ASSERT_GE(r.ok[i].start, r.ok[i - 1].end()) << i;
    }
  }
}

TEST(Simulator, FixedSeedIsReproducible) {
  const SimParams p = params(AccessMethod::EdcaAccess, 8, 90, 3);
  std::ostringstream t1, t2;
  RunOptions o1, o2;
  o1.trace = &t1;
  o2.trace = &t2;
  const RunResult a = simulate(p, o1);
  const RunResult b = simulate(p, o2);
  EXPECT_EQ(t1.str(), t2.str());
  EXPECT_FALSE(t1.str().empty());
  EXPECT_EQ(a.metrics.data_bits(), b.metrics.data_bits());
  EXPECT_EQ(a.metrics.sensing_airtime(), b.metrics.sensing_airtime());

  SimParams other = p;
  other.rng_seed = 2;
  EXPECT_NE(simulate(other).metrics.data_bits(), a.metrics.data_bits());
}

TEST(Simulator, PifsGrantsAtOpenPlusPifs) {
  const SimParams p = params(AccessMethod::PifsAccess, 6, 127, 2);
  const Recorded r = record(p);
  std::int64_t checked = 0;
  for (const Frame& f : r.ok) {
    if (f.kind != FrameKind::Ndpa) continue;
    const std::int64_t w = f.start.ns() / saw_period_us(1).ns();
    if (f.start == window_at(p, w).open_time + 25_us) ++checked;
  }
  EXPECT_EQ(checked, window_count(p));
}

TEST(Simulator, PifsRegrabsAfterEachTxop) {
  SimParams p = params(AccessMethod::PifsAccess, 16, 127, 1);
  p.txop_limit = 2000_us;
  const Recorded r = record(p);
  // Within a window the gap between sensing TxOPs is exactly PIFS.
  int regrabs = 0;
  for (std::size_t i = 1; i < r.ok.size(); ++i) {
    const Frame& a = r.ok[i - 1];
    const Frame& b = r.ok[i];
    if (is_sensing(a.kind) && is_sensing(b.kind) && b.start - a.end() != 16_us) {
      EXPECT_EQ(b.start - a.end(), 25_us);
      ++regrabs;
    }
  }
  EXPECT_GT(regrabs, 0);
  for (const auto& w : r.windows) EXPECT_EQ(w.classification, WindowClass::Complete);
}

TEST(Simulator, PifsDataStaysClearOfWindowOpen) {
  const SimParams p = params(AccessMethod::PifsAccess, 3, 90, 2);
  const Recorded r = record(p);
  for (const Frame& f : r.ok) {
    if (is_sensing(f.kind)) continue;
    const std::int64_t next = f.start.ns() / saw_period_us(1).ns() + 1;
    if (next >= window_count(p)) continue;
    EXPECT_LE(f.end(), saw_period_us(1) * next);
  }
}

TEST(Simulator, PifsClassificationIgnoresSeed) {
  for (int saw : {10, 50, 127}) {
    const Recorded a = record(params(AccessMethod::PifsAccess, 12, saw, 2, 1));
    const Recorded b = record(params(AccessMethod::PifsAccess, 12, saw, 2, 99));
    ASSERT_EQ(a.windows.size(), b.windows.size());
    for (std::size_t i = 0; i < a.windows.size(); ++i) {
      EXPECT_EQ(a.windows[i].classification, a.windows[0].classification);
      EXPECT_EQ(b.windows[i].classification, a.windows[i].classification);
      EXPECT_EQ(b.windows[i].sent_bytes, a.windows[i].sent_bytes);
    }
  }
}

TEST(Simulator, NoSensingHasNoWindowsOrOverhead) {
  const RunResult r = simulate(params(AccessMethod::NoSensing, 4, 127));
  EXPECT_EQ(r.metrics.window_count(), 0);
  EXPECT_DOUBLE_EQ(r.metrics.pso(), 0.0);
  EXPECT_GT(r.metrics.throughput_bps(), 0.0);
}

TEST(Simulator, EdcaSaw10MissesEverything) {
  const Recorded r = record(params(AccessMethod::EdcaAccess, 4, 10));
  EXPECT_DOUBLE_EQ(r.result.metrics.psm(), 100.0);
  for (const auto& w : r.windows) EXPECT_NE(w.classification, WindowClass::Complete);
}

TEST(Simulator, CollisionsHappenUnderContention) {
  const Recorded r = record(params(AccessMethod::EdcaAccess, 16, 127));
  EXPECT_FALSE(r.collided.empty());
  EXPECT_GT(r.result.metrics.partition().collision, Duration{});
}

TEST(Simulator, ReportedBytesMatchLedgers) {
  const Recorded r = record(params(AccessMethod::EdcaAccess, 9, 50));
  std::int64_t sent = 0;
  for (const auto& w : r.windows) sent += w.sent_bytes;
  EXPECT_EQ(sent, r.result.metrics.reported_bytes());
}

TEST(Simulator, BatchedSoundingCompletesAtSaw127) {
  SimParams p = params(AccessMethod::PifsAccess, 16, 127, 1);
  p.sounding = SoundingMode::Batched;
  const Recorded r = record(p);
  for (const auto& w : r.windows) {
    EXPECT_EQ(w.classification, WindowClass::Complete);
    EXPECT_EQ(w.sounding_rounds_done, 16);
  }
}

TEST(Simulator, TraceLines) {
  std::ostringstream trace;
  RunOptions opt;
  opt.trace = &trace;
  simulate(params(AccessMethod::PifsAccess, 2, 127, 0.2), opt);
  std::istringstream in(trace.str());
  std::string line;
  int frames = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3) << line;
    if (line.find(",FrameEnd,") != std::string::npos) ++frames;
  }
  EXPECT_GT(frames, 0);
}

TEST(Simulator, RejectsInvalidParams) {
  EXPECT_THROW(simulate(params(AccessMethod::PifsAccess, 0, 127)), ConfigError);
}

TEST(Simulator, CompleteRunsReportExactDemand) {
  for (auto sounding : {SoundingMode::Joint, SoundingMode::Batched}) {
    SimParams p = params(AccessMethod::PifsAccess, 7, 127, 2);
    p.sounding = sounding;
    const Recorded r = record(p);
    ASSERT_DOUBLE_EQ(r.result.metrics.psm(), 0.0);
    EXPECT_EQ(r.result.metrics.reported_bytes(),
              window_count(p) * p.num_app * p.n_sta * csi_size_bytes(p.stra.tx, p.stra.rx, p.n_b, p.n_sc));
    const int rounds = sounding == SoundingMode::Joint ? 1 : (p.n_sta + 3) / 4;
    for (const auto& w : r.windows) EXPECT_EQ(w.sounding_rounds_done, p.num_app * rounds);
  }
}

TEST(Simulator, MoreAppsNeverRescueAWindow) {
  for (int saw : {30, 50}) {
    double prev = 0;
    for (int apps = 1; apps <= 8; ++apps) {
      SimParams p = params(AccessMethod::PifsAccess, 12, saw, 1);
      p.num_app = apps;
      const double psm = simulate(p).metrics.psm();
      EXPECT_GE(psm, prev) << saw << ' ' << apps;
      prev = psm;
    }
    EXPECT_EQ(prev, 100.0);
  }
}

TEST(Simulator, NoSensingThroughputIgnoresSaw) {
  const double a = simulate(params(AccessMethod::NoSensing, 6, 10)).metrics.throughput_bps();
  const double b = simulate(params(AccessMethod::NoSensing, 6, 127)).metrics.throughput_bps();
  EXPECT_EQ(a, b);
}

TEST(Simulator, MetricsStayInRange) {
  for (auto access : {AccessMethod::EdcaAccess, AccessMethod::PifsAccess}) {
    for (int saw : {10, 50, 127}) {
      const RunResult r = simulate(params(access, 9, saw, 2));
      for (double v : {r.metrics.pso(), r.metrics.psm(), r.metrics.pawd()}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 100.0);
      }
    }
  }
}
