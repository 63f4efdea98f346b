#pragma once

#include <cstdint>
#include <stdexcept>

#include "sensesim/config.hpp"
#include "sensesim/time.hpp"

namespace sensesim {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// HE modulation and coding scheme.
struct McsEntry {
  int index;
  int bits_per_subcarrier;  // N_bpscs
  int rate_num;             // coding rate R = rate_num / rate_den
  int rate_den;

  double coding_rate() const { return static_cast<double>(rate_num) / rate_den; }
};

McsEntry mcs_entry(int index);

/// Data subcarriers (N_sd) of an HE RU of the given tone size.
int ru_data_subcarriers(int ru_tones);

/// CSI report size in bytes:
///   ceil(1.5 Ntx Nrx) + ceil(Ntx Nrx Nb Nsc / 4) + 2 Nrx
std::int64_t csi_size_bytes(int n_tx, int n_rx, int n_b, int n_sc);

double ofdma_rate_bps(int ru_tones, const McsEntry& mcs, int n_ss, double symbol_us = 13.6);

/// Preamble plus the payload rounded up to whole symbols.
Duration frame_airtime_us(std::int64_t payload_bytes, double rate_bps, Duration preamble, Duration symbol);

/// HE-LTF symbols needed to sound the given number of space-time streams.
int n_ltf(int streams);

Duration ndpa_airtime_us(int stas_in_round, const FrameSizeModel& model);
Duration ndp_airtime_us(int total_streams, const FrameSizeModel& model);
Duration report_airtime_us(std::int64_t report_bytes, int ru_tones, const McsEntry& mcs, int n_ss,
                           const FrameSizeModel& model);

/// Bytes of a report whose airtime fits in `budget` on the given RU, never
/// more than `full_bytes`.
std::int64_t report_bytes_fitting(Duration budget, std::int64_t full_bytes, int ru_tones, const McsEntry& mcs,
                                  int n_ss, const FrameSizeModel& model);

// Every airtime the simulator needs, precomputed from one SimParams.
class AirtimeModel {
 public:
  explicit AirtimeModel(const SimParams& p);

  Duration ndpa(int stas) const { return ndpa_airtime_us(stas, frames_); }
  Duration ndp(int streams) const { return ndp_airtime_us(streams, frames_); }
  Duration trigger() const { return trigger_; }
  Duration report() const { return report_; }
  Duration report_preamble() const { return report_preamble_; }
  Duration data_ampdu() const { return data_ampdu_; }
  Duration block_ack() const { return block_ack_; }
  /// A-MPDU + SIFS + block ack.
  Duration data_cycle() const { return data_cycle_; }

  std::int64_t csi_bytes() const { return csi_bytes_; }
  std::int64_t ampdu_bits() const { return ampdu_bits_; }
  int report_ru() const { return report_ru_; }

  std::int64_t partial_report_bytes(Duration budget) const;

 private:
  FrameSizeModel frames_;
  McsEntry mcs_;
  int report_streams_;
  int report_ru_;
  std::int64_t csi_bytes_;
  std::int64_t ampdu_bits_;
  Duration trigger_;
  Duration report_;
  Duration report_preamble_;
  Duration data_ampdu_;
  Duration block_ack_;
  Duration data_cycle_;
};

}  // namespace sensesim
