#include "sensesim/config.hpp"

#include <charconv>

namespace sensesim {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace

std::string_view to_string(AccessMethod m) {
  switch (m) {
    case AccessMethod::EdcaAccess: return "edca";
    case AccessMethod::PifsAccess: return "pifs";
    case AccessMethod::NoSensing: return "none";
  }
  return "?";
}

AccessMethod parse_access_method(std::string_view s) {
  if (s == "edca") return AccessMethod::EdcaAccess;
  if (s == "pifs") return AccessMethod::PifsAccess;
  if (s == "none") return AccessMethod::NoSensing;
  throw ConfigError("unknown access method '" + std::string(s) + "' (expected edca|pifs|none)");
}

std::string_view to_string(SoundingMode m) {
  return m == SoundingMode::Joint ? "joint" : "batched";
}

SoundingMode parse_sounding_mode(std::string_view s) {
  if (s == "joint") return SoundingMode::Joint;
  if (s == "batched") return SoundingMode::Batched;
  throw ConfigError("unknown sounding mode '" + std::string(s) + "' (expected joint|batched)");
}

std::string to_string(const SensingAntennaConfig& s) {
  return std::to_string(s.tx) + "x" + std::to_string(s.rx);
}

SensingAntennaConfig parse_stra(std::string_view s) {
  auto x = s.find('x');
  if (x == std::string_view::npos) throw ConfigError("STRA must be written TxR, got '" + std::string(s) + "'");
  SensingAntennaConfig c{parse_int(s.substr(0, x), "STRA tx"), parse_int(s.substr(x + 1), "STRA rx")};
  require(c.tx == 1 || c.tx == 2 || c.tx == 4 || c.tx == 8, "STRA tx must be one of 1,2,4,8");
  require(c.rx == 1 || c.rx == 2, "STRA rx must be 1 or 2");
  return c;
}

int ru_tones_per_sta(int n_sta) {
  require(n_sta >= 1 && n_sta <= 16, "n_sta must be in 1..16, got " + std::to_string(n_sta));
  if (n_sta == 1) return 996;
  if (n_sta == 2) return 484;
  if (n_sta <= 4) return 242;
  if (n_sta <= 9) return 106;
  return 52;
}

Duration saw_duration_us(int code) {
  require(code >= 1 && code <= 127, "SAW duration code must be in 1..127, got " + std::to_string(code));
  return TimeUnits::saw_code * code;
}

Duration saw_period_us(int code) {
  require(code >= 1, "SAW period code must be >= 1, got " + std::to_string(code));
  return TimeUnits::tu * (100 * static_cast<std::int64_t>(code));
}

int stas_per_sounding_round(int ap_antennas, const SensingAntennaConfig& stra) {
  require(stra.tx >= 1 && stra.tx <= ap_antennas, "STRA tx must not exceed the AP antenna count");
  return ap_antennas / stra.tx;
}

void validate(const SimParams& p) {
  ru_tones_per_sta(p.n_sta);
  require(p.num_app >= 0 && p.num_app <= 8, "num_app must be in 0..8");
  require(p.stra.tx == 1 || p.stra.tx == 2 || p.stra.tx == 4 || p.stra.tx == 8, "STRA tx must be one of 1,2,4,8");
  require(p.stra.rx == 1 || p.stra.rx == 2, "STRA rx must be 1 or 2");
  require(p.stra.tx <= p.ap_antennas, "STRA tx exceeds AP antennas");
  require(p.stra.rx <= p.sta_antennas, "STRA rx exceeds STA antennas");
  if (p.access_method != AccessMethod::NoSensing) {
    require(saw_duration_us(p.saw_duration_code) <= saw_period_us(p.saw_period_code),
            "SAW duration must fit inside the SAW period");
  }
  require(p.txop_limit > Duration{}, "TxOP limit must be positive");
  require(p.ap_antennas >= 1 && p.ap_antennas <= 8, "ap_antennas must be in 1..8");
  require(p.sta_antennas >= 1 && p.sta_antennas <= 8, "sta_antennas must be in 1..8");
  require(p.bandwidth_mhz == 80, "only 80 MHz operation is modelled");
  require(p.mcs_index >= 0 && p.mcs_index <= 11, "mcs_index must be in 0..11");
  require(p.n_b >= 1 && p.n_sc >= 1 && p.n_g >= 1, "n_b, n_sc and n_g must be positive");
  // Grouped reporting includes both band-edge tones, so Ng=4 over 996 tones yields 250.
  require(p.n_sc <= kMaxSubcarriers80MHz / p.n_g + 1, "n_sc exceeds the grouped subcarrier count");
  require(p.ampdu_packets >= 1 && p.packet_bytes >= 1, "A-MPDU payload must be non-empty");
  require(p.ampdus_per_txop >= 0, "ampdus_per_txop must be >= 0");
  require(p.report_streams >= 1 && p.report_streams <= p.sta_antennas, "report_streams must be in 1..sta_antennas");
  require(p.sim_duration_s > 0.0, "sim duration must be positive");
  require(p.timing.sifs > Duration{} && p.timing.slot > Duration{}, "SIFS and slot must be positive");
  require(p.edca.cw_min >= 0 && p.edca.cw_min <= p.edca.cw_max, "require 0 <= cw_min <= cw_max");
  require(p.edca.aifsn >= 2, "AIFSN must be >= 2");
  require(p.edca.retry_limit >= 1, "retry_limit must be >= 1");
  const auto& f = p.frames;
  require(f.ndpa_base_bytes > 0 && f.ndpa_per_sta_info_bytes > 0 && f.trigger_bytes > 0 && f.block_ack_bytes > 0 &&
              f.legacy_preamble_us > 0 && f.he_preamble_base_us > 0 && f.he_ltf_us_per_stream > 0 &&
              f.control_rate_mbps > 0 && f.legacy_symbol_us > 0 && f.symbol_duration_us > 0,
          "frame size model values must be strictly positive");
}

}  // namespace sensesim
