#include "sensesim/metrics.hpp"

namespace sensesim {

void MetricsAccumulator::add_window(const SawWindowLedger& ledger, Duration saw_duration) {
  ++windows_;
  ++class_counts_[static_cast<std::size_t>(ledger.classification)];
  pawd_sum_ += 100.0 * static_cast<double>(ledger.available_sensing.ns()) / static_cast<double>(saw_duration.ns());
}

double MetricsAccumulator::pso() const {
  if (sim_time_ <= Duration{}) throw MetricsError("PSO needs a positive simulation time");
  return 100.0 * static_cast<double>(partition_.sensing.ns()) / static_cast<double>(sim_time_.ns());
}

double MetricsAccumulator::psm() const {
  if (windows_ == 0) throw MetricsError("PSM needs at least one SAW window");
  const auto missed = count(WindowClass::PartiallyMissed) + count(WindowClass::CompletelyMissed);
  return 100.0 * static_cast<double>(missed) / static_cast<double>(windows_);
}

double MetricsAccumulator::throughput_bps() const {
  if (sim_time_ <= Duration{}) return 0.0;
  return static_cast<double>(data_bits_) / sim_time_.seconds();
}

double MetricsAccumulator::pawd() const {
  if (windows_ == 0) throw MetricsError("PAWD needs at least one SAW window");
  return pawd_sum_ / static_cast<double>(windows_);
}

}  // namespace sensesim
