#pragma once

#include <cstdint>

#include "sensesim/airtime.hpp"
#include "sensesim/time.hpp"

namespace sensesim {

/// One saturated STA's A-MPDU payload and its block-ack cycle.
struct DataBurst {
  std::int64_t ampdu_bits;
  Duration ampdu_airtime;
  Duration cycle;  // A-MPDU + SIFS + block ack
  int max_cycles;  // per TxOP, 0 = as many as fit
};

DataBurst data_burst(const SimParams& p, const AirtimeModel& air);

struct DataTxop {
  std::int64_t bits_sent = 0;
  Duration occupied{};
  int cycles = 0;
};

/// Emits A-MPDU/block-ack cycles back to back while the next full cycle still
/// fits in `limit`.
DataTxop fill_data_txop(const DataBurst& burst, Duration limit, Duration sifs);

}  // namespace sensesim
