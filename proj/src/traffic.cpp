#include "sensesim/traffic.hpp"

#include <vector>

#include "sensesim/medium.hpp"

namespace sensesim {

DataBurst data_burst(const SimParams& p, const AirtimeModel& air) {
  return DataBurst{air.ampdu_bits(), air.data_ampdu(), air.data_cycle(), p.ampdus_per_txop};
}

DataTxop fill_data_txop(const DataBurst& burst, Duration limit, Duration sifs) {
  if (limit < burst.cycle) return {};
  // Bound the candidate list by what could possibly fit.
  std::int64_t fit = 1 + (limit - burst.cycle).ns() / (burst.cycle + sifs).ns();
  if (burst.max_cycles > 0 && fit > burst.max_cycles) fit = burst.max_cycles;
  const std::vector<Duration> cycles(static_cast<std::size_t>(fit), burst.cycle);
  const TxopRecord rec = hold_txop(cycles, limit, sifs);
  DataTxop out;
  out.cycles = static_cast<int>(rec.exchanges_sent);
  out.bits_sent = burst.ampdu_bits * out.cycles;
  out.occupied = rec.occupied;
  return out;
}

}  // namespace sensesim
