#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "sensesim/sensing.hpp"
#include "sensesim/time.hpp"

namespace sensesim {

struct MetricsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where every nanosecond of the run went.
struct TimePartition {
  Duration idle{};
  Duration contention{};
  Duration data{};
  Duration sensing{};
  Duration collision{};

  Duration total() const { return idle + contention + data + sensing + collision; }
};

class MetricsAccumulator {
 public:
  void add_sensing_airtime(Duration d) { partition_.sensing += d; }
  void add_data_airtime(Duration d) { partition_.data += d; }
  void add_collision(Duration d) { partition_.collision += d; }
  void add_contention(Duration d) { partition_.contention += d; }
  void add_idle(Duration d) { partition_.idle += d; }
  void add_data_bits(std::int64_t bits) { data_bits_ += bits; }
  void add_sensing_bytes(std::int64_t bytes) { sensing_bytes_ += bytes; }
  void add_window(const SawWindowLedger& ledger, Duration saw_duration);
  void set_sim_time(Duration t) { sim_time_ = t; }

  const TimePartition& partition() const { return partition_; }
  Duration sensing_airtime() const { return partition_.sensing; }
  std::int64_t data_bits() const { return data_bits_; }
  std::int64_t reported_bytes() const { return sensing_bytes_; }
  Duration sim_time() const { return sim_time_; }
  std::int64_t window_count() const { return windows_; }
  std::int64_t count(WindowClass c) const { return class_counts_[static_cast<std::size_t>(c)]; }

  double pso() const;
  double psm() const;
  double throughput_bps() const;
  double pawd() const;

 private:
  TimePartition partition_;
  std::int64_t data_bits_ = 0;
  std::int64_t sensing_bytes_ = 0;
  Duration sim_time_{};
  std::int64_t windows_ = 0;
  std::array<std::int64_t, 3> class_counts_{};
  double pawd_sum_ = 0.0;
};

}  // namespace sensesim
