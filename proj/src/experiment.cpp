#include "sensesim/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <type_traits>

namespace sensesim {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

const std::vector<int> kGridNsta{1, 4, 8, 12, 16};

}  // namespace

std::vector<SimParams> SweepSpec::points() const {
  std::vector<SimParams> out;
  SimParams p = base;
  switch (config_id) {
    case 1:
      p.num_app = 4;
      p.stra = {2, 2};
      for (int n = 1; n <= 16; ++n) {
        for (int saw : {10, 50, 90, 127}) {
          p.n_sta = n;
          p.saw_duration_code = saw;
          out.push_back(p);
        }
      }
      break;
    case 2:
      p.saw_duration_code = 127;
      p.stra = {2, 2};
      for (int n : kGridNsta) {
        for (int apps : {1, 2, 4, 6, 8}) {
          p.n_sta = n;
          p.num_app = apps;
          out.push_back(p);
        }
      }
      break;
    case 3:
      p.num_app = 4;
      p.saw_duration_code = 127;
      for (int n : kGridNsta) {
        for (int tx : {1, 2, 4, 8}) {
          p.n_sta = n;
          p.stra = {tx, tx == 1 ? 1 : 2};
          out.push_back(p);
        }
      }
      break;
    default:
      throw ConfigError("config must be 1, 2 or 3");
  }
  return out;
}

SweepSpec make_sweep(int config_id, const SimParams& base) {
  SweepSpec s{config_id, base};
  (void)s.points();  // rejects unknown ids early
  return s;
}

ResultRow make_row(const RunResult& r) {
  const SimParams& p = r.params;
  const MetricsAccumulator& m = r.metrics;
  ResultRow row;
  row.n_sta = p.n_sta;
  row.num_app = p.num_app;
  row.stra = p.stra;
  row.saw_code = p.saw_duration_code;
  row.access = p.access_method;
  row.seed = p.rng_seed;
  row.duration_s = p.sim_duration_s;
  row.pso_pct = m.pso();
  row.throughput_mbps = m.throughput_bps() / 1e6;
  row.window_count = m.window_count();
  if (m.window_count() > 0) {
    row.psm_pct = m.psm();
    row.pawd_pct = m.pawd();
  }
  return row;
}

ResultRow run_single(const SimParams& p, const RunOptions& options) { return make_row(simulate(p, options)); }

std::string to_csv(const ResultRow& r) {
  std::string s;
  s += std::to_string(r.n_sta) + ',' + std::to_string(r.num_app) + ',' + to_string(r.stra) + ',' +
       std::to_string(r.saw_code) + ',' + std::string(to_string(r.access)) + ',' + std::to_string(r.seed) + ',' +
       fmt_double(r.duration_s) + ',' + fmt_double(r.pso_pct) + ',';
  if (r.psm_pct) s += fmt_double(*r.psm_pct);
  s += ',' + fmt_double(r.throughput_mbps) + ',';
  if (r.pawd_pct) s += fmt_double(*r.pawd_pct);
  s += ',' + std::to_string(r.window_count);
  return s;
}

ResultRow parse_csv_row(std::string_view line) {
  const auto f = split(trim(line), ',');
  if (f.size() != 12) throw ConfigError("result row needs 12 fields, got " + std::to_string(f.size()));
  ResultRow r;
  r.n_sta = parse_number<int>(f[0], "nsta");
  r.num_app = parse_number<int>(f[1], "numapp");
  r.stra = parse_stra(f[2]);
  r.saw_code = parse_number<int>(f[3], "saw_code");
  r.access = parse_access_method(f[4]);
  r.seed = parse_number<std::uint64_t>(f[5], "seed");
  r.duration_s = parse_number<double>(f[6], "duration_s");
  r.pso_pct = parse_number<double>(f[7], "pso_pct");
  if (!f[8].empty()) r.psm_pct = parse_number<double>(f[8], "psm_pct");
  r.throughput_mbps = parse_number<double>(f[9], "throughput_mbps");
  if (!f[10].empty()) r.pawd_pct = parse_number<double>(f[10], "pawd_pct");
  r.window_count = parse_number<std::int64_t>(f[11], "window_count");
  return r;
}

void apply_param(std::string_view key, std::string_view v, SimParams& p) {
  auto num = [&](auto& field) { field = parse_number<std::remove_reference_t<decltype(field)>>(v, key); };
  auto us = [&](Duration& field) { field = Duration::from_us(parse_number<double>(v, key)); };

  if (key == "nsta" || key == "n_sta") num(p.n_sta);
  else if (key == "numapp" || key == "num_app") num(p.num_app);
  else if (key == "stra") p.stra = parse_stra(v);
  else if (key == "saw_duration" || key == "saw_code") num(p.saw_duration_code);
  else if (key == "saw_period") num(p.saw_period_code);
  else if (key == "access") p.access_method = parse_access_method(v);
  else if (key == "txop_limit_us") us(p.txop_limit);
  else if (key == "ap_antennas") num(p.ap_antennas);
  else if (key == "sta_antennas") num(p.sta_antennas);
  else if (key == "bandwidth_mhz") num(p.bandwidth_mhz);
  else if (key == "mcs") num(p.mcs_index);
  else if (key == "n_b") num(p.n_b);
  else if (key == "n_sc") num(p.n_sc);
  else if (key == "n_g") num(p.n_g);
  else if (key == "ampdu_packets") num(p.ampdu_packets);
  else if (key == "packet_bytes") num(p.packet_bytes);
  else if (key == "ampdus_per_txop") num(p.ampdus_per_txop);
  else if (key == "report_streams") num(p.report_streams);
  else if (key == "sounding") p.sounding = parse_sounding_mode(v);
  else if (key == "duration_s") num(p.sim_duration_s);
  else if (key == "seed") num(p.rng_seed);
  else if (key == "sifs_us") us(p.timing.sifs);
  else if (key == "slot_us") us(p.timing.slot);
  else if (key == "cw_min") num(p.edca.cw_min);
  else if (key == "cw_max") num(p.edca.cw_max);
  else if (key == "aifsn") num(p.edca.aifsn);
  else if (key == "retry_limit") num(p.edca.retry_limit);
  else if (key == "ndpa_base_bytes") num(p.frames.ndpa_base_bytes);
  else if (key == "ndpa_per_sta_info_bytes") num(p.frames.ndpa_per_sta_info_bytes);
  else if (key == "trigger_bytes") num(p.frames.trigger_bytes);
  else if (key == "block_ack_bytes") num(p.frames.block_ack_bytes);
  else if (key == "legacy_preamble_us") num(p.frames.legacy_preamble_us);
  else if (key == "he_preamble_base_us") num(p.frames.he_preamble_base_us);
  else if (key == "he_ltf_us_per_stream") num(p.frames.he_ltf_us_per_stream);
  else if (key == "control_rate_mbps") num(p.frames.control_rate_mbps);
  else if (key == "legacy_symbol_us") num(p.frames.legacy_symbol_us);
  else if (key == "symbol_duration_us") num(p.frames.symbol_duration_us);
  else throw ConfigError("unknown parameter '" + std::string(key) + "'");
}

void apply_param_file(std::istream& in, SimParams& p) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    }
    apply_param(trim(s.substr(0, eq)), trim(s.substr(eq + 1)), p);
  }
}

void run_sweep(const SweepSpec& spec, std::ostream& out, int jobs) {
  const std::vector<SimParams> points = spec.points();
  for (const auto& p : points) validate(p);

  out << kCsvHeader << '\n' << std::flush;
  if (!out) throw std::runtime_error("cannot write sweep output");

  std::mutex mu;
  std::size_t next_task = 0;
  std::size_t next_write = 0;
  std::map<std::size_t, std::string> done;
  std::exception_ptr failure;

  auto write_ready = [&] {
    while (true) {
      auto it = done.find(next_write);
      if (it == done.end()) break;
      out << it->second << '\n' << std::flush;
      if (!out) throw std::runtime_error("cannot write sweep output");
      done.erase(it);
      ++next_write;
    }
  };

  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (failure || next_task >= points.size()) return;
        i = next_task++;
      }
      try {
        std::string row = to_csv(run_single(points[i]));
        std::lock_guard lock(mu);
        done.emplace(i, std::move(row));
        write_ready();
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const int n = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string to_csv(const SawWindowLedger& l) {
  return std::to_string(l.window_index) + ',' + std::to_string(l.required_bytes) + ',' +
         std::to_string(l.sent_bytes) + ',' + std::string(to_string(l.classification)) + ',' +
         fmt_double(static_cast<double>(l.available_sensing.ns()) / 1000.0);
}

}  // namespace sensesim
