#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sensesim/config.hpp"
#include "sensesim/time.hpp"

namespace sensesim {

using StationId = int;
inline constexpr StationId kApId = 0;

enum class FrameKind : std::uint8_t { Ndpa, Ndp, ReportTrigger, CsiReport, Ampdu, BlockAck };

constexpr const char* to_string(FrameKind k) {
  switch (k) {
    case FrameKind::Ndpa: return "NDPA";
    case FrameKind::Ndp: return "NDP";
    case FrameKind::ReportTrigger: return "ReportTrigger";
    case FrameKind::CsiReport: return "CsiReport";
    case FrameKind::Ampdu: return "AMPDU";
    case FrameKind::BlockAck: return "BlockAck";
  }
  return "?";
}

constexpr bool is_sensing(FrameKind k) {
  return k == FrameKind::Ndpa || k == FrameKind::Ndp || k == FrameKind::ReportTrigger || k == FrameKind::CsiReport;
}

/// One medium occupation. A CSI report stands for the whole OFDMA PPDU; its
/// byte count is the sum over all reporting STAs.
struct Frame {
  FrameKind kind;
  Time start;
  Duration airtime;
  std::int64_t bytes = 0;
  StationId tx = kApId;
  int ru_tones = 0;

  Time end() const { return start + airtime; }
};

/// Deterministic per-station random stream.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, StationId station) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(station), 0x5eu};
    engine_.seed(seq);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

/// Binary exponential backoff state of one station.
class EdcaState {
 public:
  explicit EdcaState(const EdcaParams& p) : params_(p), cw_(p.cw_min) {}

  int cw() const { return cw_; }
  int retries() const { return retries_; }

  /// Uniform draw in [0, cw].
  int draw_backoff(RandomStream& rng) const { return rng.uniform(0, cw_); }

  void on_success() { reset(); }

  /// The pending frame is gone (delivered, or dropped by the sender).
  void reset() {
    cw_ = params_.cw_min;
    retries_ = 0;
  }

  void on_collision() {
    if (++retries_ > params_.retry_limit) {
      reset();
      return;
    }
    cw_ = std::min(2 * cw_ + 1, params_.cw_max);
  }

 private:
  EdcaParams params_;
  int cw_;
  int retries_ = 0;
};

/// A station counting down backoff slots from `count_start`.
struct Contender {
  StationId station;
  Time count_start;
  int counter;

  Time expiry(Duration slot) const { return count_start + slot * counter; }
};

struct ContentionOutcome {
  Time access_time;
  std::vector<StationId> winners;  // more than one means collision

  bool collided() const { return winners.size() > 1; }
};

/// Finds the earliest expiring contender(s). Losers freeze with their counters
/// reduced by the idle slots they observed (count_start advances by the same
/// slots, so their expiry is unchanged); winners are left at zero.
std::optional<ContentionOutcome> resolve_contention(std::span<Contender> contenders, Duration slot);

/// Slots a contender has counted by `now`.
int slots_elapsed(const Contender& c, Time now, Duration slot);

/// PIFS access: no backoff, PIFS after the medium is (or becomes) free.
Time pifs_grab(Time time, Time busy_until, Duration pifs);

struct TxopRecord {
  Duration occupied{};
  std::size_t exchanges_sent = 0;
  bool unsendable = false;  // first exchange alone exceeds the limit
};

/// Packs frame exchanges back to back, SIFS apart, while the next one still
/// ends within `limit` of the TxOP start.
TxopRecord hold_txop(std::span<const Duration> exchanges, Duration limit, Duration sifs);

}  // namespace sensesim
