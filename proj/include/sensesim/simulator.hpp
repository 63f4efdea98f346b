#pragma once

#include <functional>
#include <iosfwd>

#include "sensesim/config.hpp"
#include "sensesim/medium.hpp"
#include "sensesim/metrics.hpp"
#include "sensesim/sensing.hpp"

namespace sensesim {

struct RunOptions {
  std::ostream* trace = nullptr;  // one CSV line per event
  std::function<void(const Frame&, bool collided)> on_frame;
  std::function<void(const SawWindowLedger&)> on_window;
};

struct RunResult {
  SimParams params;
  MetricsAccumulator metrics;
};

/// Runs one single-BSS simulation to completion. Deterministic for a given
/// SimParams (including rng_seed).
RunResult simulate(const SimParams& params, const RunOptions& options = {});

/// Header line written before trace output.
inline constexpr const char* kTraceHeader = "timestamp_us,kind,subject,detail";

}  // namespace sensesim
