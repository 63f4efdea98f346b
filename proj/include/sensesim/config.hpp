#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sensesim/time.hpp"

namespace sensesim {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class AccessMethod { EdcaAccess, PifsAccess, NoSensing };

std::string_view to_string(AccessMethod m);
AccessMethod parse_access_method(std::string_view s);

// How a sensing application sounds its responders.
//  Joint:   one NDPA addressing every responder, one NDP from stra.tx antennas.
//  Batched: ceil(n_sta / stas_per_sounding_round) NDPA+NDP rounds, each NDP
//           carrying stas_in_round * stra.tx streams.
enum class SoundingMode { Joint, Batched };

std::string_view to_string(SoundingMode m);
SoundingMode parse_sounding_mode(std::string_view s);

/// Antennas used for sensing: N_tx AP antennas per responder, N_rx STA antennas.
struct SensingAntennaConfig {
  int tx = 2;
  int rx = 2;

  friend bool operator==(const SensingAntennaConfig&, const SensingAntennaConfig&) = default;
};

std::string to_string(const SensingAntennaConfig& s);
/// Parses the "TxR" notation, e.g. "4x2".
SensingAntennaConfig parse_stra(std::string_view s);

/// MAC interframe timing. PIFS and DIFS are derived.
struct TimeUnits {
  static constexpr Duration tu = 1024_us;
  static constexpr Duration saw_code = 100_us;

  Duration sifs = 16_us;
  Duration slot = 9_us;

  Duration pifs() const { return sifs + slot; }
  Duration difs() const { return sifs + slot * 2; }
};

struct EdcaParams {
  int cw_min = 15;
  int cw_max = 1023;
  int aifsn = 3;
  int retry_limit = 7;
};

// Byte and duration model for sensing and control frames. Durations in
// microseconds, rates in Mb/s.
struct FrameSizeModel {
  int ndpa_base_bytes = 21;
  int ndpa_per_sta_info_bytes = 4;
  int trigger_bytes = 21;
  int block_ack_bytes = 32;
  double legacy_preamble_us = 20.0;
  double he_preamble_base_us = 16.0;
  double he_ltf_us_per_stream = 8.0;
  double control_rate_mbps = 24.0;
  double legacy_symbol_us = 4.0;
  double symbol_duration_us = 13.6;
};

struct SimParams {
  int n_sta = 4;
  int num_app = 4;
  SensingAntennaConfig stra{};
  int saw_duration_code = 127;
  int saw_period_code = 1;
  AccessMethod access_method = AccessMethod::PifsAccess;
  Duration txop_limit = 5484_us;
  int ap_antennas = 8;
  int sta_antennas = 2;
  int bandwidth_mhz = 80;
  int mcs_index = 6;
  int n_b = 8;
  int n_sc = 250;
  int n_g = 4;
  int ampdu_packets = 10;
  int packet_bytes = 1500;
  // A-MPDU/block-ack cycles per data TxOP; 0 packs cycles up to the TxOP limit.
  int ampdus_per_txop = 1;
  // Spatial streams each responder uses for its uplink CSI report.
  int report_streams = 1;
  SoundingMode sounding = SoundingMode::Joint;
  double sim_duration_s = 100.0;
  std::uint64_t rng_seed = 1;

  TimeUnits timing{};
  EdcaParams edca{};
  FrameSizeModel frames{};

  Duration aifs() const { return timing.sifs + timing.slot * edca.aifsn; }
  Duration sim_duration() const { return Duration::from_us(sim_duration_s * 1e6); }
};

inline constexpr int kMaxSubcarriers80MHz = 996;

/// Throws ConfigError on any violated invariant.
void validate(const SimParams& p);

/// RU size in tones granted to each STA for OFDMA reporting, keyed by the
/// total number of STAs.
int ru_tones_per_sta(int n_sta);

Duration saw_duration_us(int code);
Duration saw_period_us(int code);

/// Responders that can be sounded by one NDPA/NDP exchange.
int stas_per_sounding_round(int ap_antennas, const SensingAntennaConfig& stra);

}  // namespace sensesim
