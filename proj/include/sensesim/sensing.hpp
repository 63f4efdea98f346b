#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "sensesim/airtime.hpp"
#include "sensesim/config.hpp"
#include "sensesim/medium.hpp"
#include "sensesim/time.hpp"

namespace sensesim {

struct SawWindow {
  std::int64_t index;
  Time open_time;
  Time close_time;
};

/// Windows at 0, P, 2P, ...; a trailing partial period gets no window.
std::vector<SawWindow> schedule_windows(const SimParams& p);
std::int64_t window_count(const SimParams& p);
SawWindow window_at(const SimParams& p, std::int64_t index);

/// What one SAW window must deliver: num_app reports from each of n_sta STAs.
struct SensingDemand {
  int num_app = 0;
  int n_sta = 0;
  std::int64_t report_bytes = 0;   // one CSI report
  std::vector<int> round_stas;     // responders addressed per sounding round of one app
  std::vector<int> round_streams;  // NDP streams per sounding round

  int rounds_per_app() const { return static_cast<int>(round_stas.size()); }
  std::int64_t required_bytes() const { return static_cast<std::int64_t>(num_app) * n_sta * report_bytes; }
  int required_rounds() const { return num_app * rounds_per_app(); }
};

SensingDemand make_demand(const SimParams& p);

enum class WindowClass : std::uint8_t { Complete, PartiallyMissed, CompletelyMissed };

std::string_view to_string(WindowClass c);

struct SawWindowLedger {
  std::int64_t window_index = 0;
  std::int64_t required_bytes = 0;
  std::int64_t sent_bytes = 0;
  int sounding_rounds_done = 0;
  int sounding_rounds_required = 0;
  Duration lost{};               // non-sensing medium time before completion
  std::optional<Time> completed_at;
  Duration available_sensing{};  // filled in at close
  WindowClass classification = WindowClass::CompletelyMissed;
};

WindowClass classify_window(const SawWindowLedger& ledger);

/// Largest report size whose airtime fits in `remaining`. Calling it with
/// room for the full report is a contract violation.
std::int64_t send_partial_report(Duration remaining, std::int64_t full_report_bytes, int ru_tones,
                                 const McsEntry& mcs, int n_ss, const FrameSizeModel& model);

struct TxopPlan {
  std::vector<Frame> frames;
  Time end;             // end of the last frame, or the start time if nothing was sent
  bool exhausted = false;  // nothing further can be sent in this window
};

// Walks one window's sounding and reporting exchanges, packing them into
// TxOPs. Each app runs its sounding rounds and then one OFDMA report exchange.
// Sounding exchanges are atomic; a report that meets the window close is
// truncated there, one that meets the TxOP limit waits for the next TxOP.
class SmePlanner {
 public:
  SmePlanner(const SimParams& p, const AirtimeModel& air, const SawWindow& window);

  bool done() const { return next_ >= exchanges_.size(); }
  bool exhausted() const { return exhausted_; }
  const SawWindowLedger& ledger() const { return ledger_; }
  SawWindowLedger& ledger() { return ledger_; }
  const SawWindow& window() const { return window_; }

  /// Duration of the first frame of the next exchange (what would collide).
  Duration next_first_frame() const;

  TxopPlan plan_txop(Time start, Duration txop_limit);

 private:
  struct Exchange {
    bool report;
    int stas;
    int streams;
  };

  void emit(std::vector<Frame>& out, FrameKind kind, Time start, Duration airtime, std::int64_t bytes);

  const AirtimeModel* air_;
  SawWindow window_;
  Duration sifs_;
  int n_sta_;
  std::vector<Exchange> exchanges_;
  std::size_t next_ = 0;
  bool exhausted_ = false;
  SawWindowLedger ledger_;
};

/// Medium access for the AP: given the time it is ready, when it gets a TxOP
/// (nullopt if it never does).
using AccessFn = std::function<std::optional<Time>(Time ready)>;

/// Runs one window's exchange in isolation, acquiring TxOPs through `acquire`.
SawWindowLedger run_sme(const SimParams& p, const AirtimeModel& air, const SawWindow& window,
                        const AccessFn& acquire);

}  // namespace sensesim
