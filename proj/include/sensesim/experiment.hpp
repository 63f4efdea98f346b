#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sensesim/config.hpp"
#include "sensesim/simulator.hpp"

namespace sensesim {

/// One of the three parameter grids.
struct SweepSpec {
  int config_id = 1;
  SimParams base{};  // fixed parameters; swept fields are overwritten

  /// Grid points in output order.
  std::vector<SimParams> points() const;
};

SweepSpec make_sweep(int config_id, const SimParams& base);

struct ResultRow {
  int n_sta = 0;
  int num_app = 0;
  SensingAntennaConfig stra{};
  int saw_code = 0;
  AccessMethod access = AccessMethod::PifsAccess;
  std::uint64_t seed = 0;
  double duration_s = 0.0;
  double pso_pct = 0.0;
  std::optional<double> psm_pct;   // empty without sensing
  double throughput_mbps = 0.0;
  std::optional<double> pawd_pct;
  std::int64_t window_count = 0;
};

inline constexpr const char* kCsvHeader =
    "nsta,numapp,stra,saw_code,access,seed,duration_s,pso_pct,psm_pct,throughput_mbps,pawd_pct,window_count";

ResultRow make_row(const RunResult& r);
ResultRow run_single(const SimParams& p, const RunOptions& options = {});

std::string to_csv(const ResultRow& r);
ResultRow parse_csv_row(std::string_view line);

/// Applies key=value lines ('#' starts a comment) to `p`. Unknown keys throw.
void apply_param_file(std::istream& in, SimParams& p);
void apply_param(std::string_view key, std::string_view value, SimParams& p);

/// Runs every grid point with `jobs` worker threads and writes the header plus
/// one row per point in grid order, flushing each row as soon as it is due.
void run_sweep(const SweepSpec& spec, std::ostream& out, int jobs = 1);

inline constexpr const char* kLedgerHeader = "window_index,required_bytes,sent_bytes,classification,available_us";
std::string to_csv(const SawWindowLedger& l);

}  // namespace sensesim
