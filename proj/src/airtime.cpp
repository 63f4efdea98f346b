#include "sensesim/airtime.hpp"

#include <array>
#include <cmath>
#include <string>

namespace sensesim {

namespace {

constexpr std::array<McsEntry, 12> kHeMcs{{
    {0, 1, 1, 2},
    {1, 2, 1, 2},
    {2, 2, 3, 4},
    {3, 4, 1, 2},
    {4, 4, 3, 4},
    {5, 6, 2, 3},
    {6, 6, 3, 4},
    {7, 6, 5, 6},
    {8, 8, 3, 4},
    {9, 8, 5, 6},
    {10, 10, 3, 4},
    {11, 10, 5, 6},
}};

Duration us(double v) { return Duration::from_us(v); }

Duration legacy_control_airtime(std::int64_t bytes, const FrameSizeModel& m) {
  return frame_airtime_us(bytes, m.control_rate_mbps * 1e6, us(m.legacy_preamble_us), us(m.legacy_symbol_us));
}

Duration he_preamble(int streams, const FrameSizeModel& m) {
  return us(m.legacy_preamble_us + m.he_preamble_base_us + n_ltf(streams) * m.he_ltf_us_per_stream);
}

}  // namespace

McsEntry mcs_entry(int index) {
  if (index < 0 || index >= static_cast<int>(kHeMcs.size())) {
    throw DomainError("unknown MCS index " + std::to_string(index));
  }
  return kHeMcs[static_cast<std::size_t>(index)];
}

int ru_data_subcarriers(int ru_tones) {
  switch (ru_tones) {
    case 26: return 24;
    case 52: return 48;
    case 106: return 102;
    case 242: return 234;
    case 484: return 468;
    case 996: return 980;
    default: throw DomainError("unknown RU size " + std::to_string(ru_tones));
  }
}

std::int64_t csi_size_bytes(int n_tx, int n_rx, int n_b, int n_sc) {
  if (n_tx < 1 || n_rx < 1 || n_b < 1 || n_sc < 1) {
    throw DomainError("CSI size arguments must all be >= 1");
  }
  const std::int64_t ant = static_cast<std::int64_t>(n_tx) * n_rx;
  const std::int64_t header = (3 * ant + 1) / 2;  // ceil(1.5 * ant)
  const std::int64_t body = (ant * n_b * n_sc + 3) / 4;
  return header + body + 2 * static_cast<std::int64_t>(n_rx);
}

double ofdma_rate_bps(int ru_tones, const McsEntry& mcs, int n_ss, double symbol_us) {
  if (n_ss < 1) throw DomainError("n_ss must be >= 1");
  const double bits_per_symbol = ru_data_subcarriers(ru_tones) * mcs.bits_per_subcarrier * mcs.coding_rate() * n_ss;
  return bits_per_symbol / (symbol_us * 1e-6);
}

Duration frame_airtime_us(std::int64_t payload_bytes, double rate_bps, Duration preamble, Duration symbol) {
  if (!(rate_bps > 0.0)) throw DomainError("rate must be positive");
  if (payload_bytes < 0) throw DomainError("payload must be non-negative");
  const double bits_per_symbol = rate_bps * symbol.seconds();
  const double symbols = static_cast<double>(payload_bytes) * 8.0 / bits_per_symbol;
  const auto n_sym = static_cast<std::int64_t>(std::ceil(symbols - 1e-9));
  return preamble + symbol * n_sym;
}

int n_ltf(int streams) {
  if (streams < 1) throw DomainError("stream count must be >= 1");
  if (streams <= 2) return streams;
  if (streams <= 4) return 4;
  if (streams <= 6) return 6;
  return 8;
}

Duration ndpa_airtime_us(int stas_in_round, const FrameSizeModel& model) {
  if (stas_in_round < 1) throw DomainError("an NDPA addresses at least one STA");
  return legacy_control_airtime(model.ndpa_base_bytes + static_cast<std::int64_t>(stas_in_round) * model.ndpa_per_sta_info_bytes,
                                model);
}

Duration ndp_airtime_us(int total_streams, const FrameSizeModel& model) {
  return he_preamble(total_streams, model);
}

Duration report_airtime_us(std::int64_t report_bytes, int ru_tones, const McsEntry& mcs, int n_ss,
                           const FrameSizeModel& model) {
  const double rate = ofdma_rate_bps(ru_tones, mcs, n_ss, model.symbol_duration_us);
  return frame_airtime_us(report_bytes, rate, he_preamble(n_ss, model), us(model.symbol_duration_us));
}

std::int64_t report_bytes_fitting(Duration budget, std::int64_t full_bytes, int ru_tones, const McsEntry& mcs,
                                  int n_ss, const FrameSizeModel& model) {
  const Duration preamble = he_preamble(n_ss, model);
  if (budget <= preamble) return 0;
  const Duration symbol = us(model.symbol_duration_us);
  const std::int64_t n_sym = (budget - preamble).ns() / symbol.ns();
  const double bits_per_symbol = ofdma_rate_bps(ru_tones, mcs, n_ss, model.symbol_duration_us) * symbol.seconds();
  const auto bytes = static_cast<std::int64_t>(std::floor(n_sym * bits_per_symbol / 8.0 + 1e-9));
  return bytes < full_bytes ? bytes : full_bytes;
}

AirtimeModel::AirtimeModel(const SimParams& p)
    : frames_(p.frames),
      mcs_(mcs_entry(p.mcs_index)),
      report_streams_(p.report_streams),
      report_ru_(ru_tones_per_sta(p.n_sta)),
      csi_bytes_(csi_size_bytes(p.stra.tx, p.stra.rx, p.n_b, p.n_sc)),
      ampdu_bits_(static_cast<std::int64_t>(p.ampdu_packets) * p.packet_bytes * 8) {
  trigger_ = legacy_control_airtime(frames_.trigger_bytes, frames_);
  report_ = report_airtime_us(csi_bytes_, report_ru_, mcs_, report_streams_, frames_);
  report_preamble_ = he_preamble(report_streams_, frames_);
  const double data_rate = ofdma_rate_bps(kMaxSubcarriers80MHz, mcs_, p.sta_antennas, frames_.symbol_duration_us);
  data_ampdu_ = frame_airtime_us(ampdu_bits_ / 8, data_rate, he_preamble(p.sta_antennas, frames_),
                                 us(frames_.symbol_duration_us));
  block_ack_ = legacy_control_airtime(frames_.block_ack_bytes, frames_);
  data_cycle_ = data_ampdu_ + p.timing.sifs + block_ack_;
}

std::int64_t AirtimeModel::partial_report_bytes(Duration budget) const {
  return report_bytes_fitting(budget, csi_bytes_, report_ru_, mcs_, report_streams_, frames_);
}

}  // namespace sensesim
