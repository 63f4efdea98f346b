#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>

namespace sensesim {

// Simulation time and durations share one integer nanosecond representation so
// that event ordering and time accounting are exact.
class Duration {
 public:
  constexpr Duration() = default;

  static constexpr Duration from_ns(std::int64_t ns) { return Duration(ns); }
  static Duration from_us(double us) { return Duration(static_cast<std::int64_t>(std::llround(us * 1000.0))); }
  static constexpr Duration max() { return Duration(std::numeric_limits<std::int64_t>::max()); }

  constexpr std::int64_t ns() const { return ns_; }
  constexpr double us() const { return static_cast<double>(ns_) / 1000.0; }
  constexpr double seconds() const { return static_cast<double>(ns_) / 1e9; }

  constexpr auto operator<=>(const Duration&) const = default;

  constexpr Duration& operator+=(Duration o) { ns_ += o.ns_; return *this; }
  constexpr Duration& operator-=(Duration o) { ns_ -= o.ns_; return *this; }
  friend constexpr Duration operator+(Duration a, Duration b) { return Duration(a.ns_ + b.ns_); }
  friend constexpr Duration operator-(Duration a, Duration b) { return Duration(a.ns_ - b.ns_); }
  friend constexpr Duration operator*(Duration a, std::int64_t k) { return Duration(a.ns_ * k); }
  friend constexpr Duration operator*(std::int64_t k, Duration a) { return Duration(a.ns_ * k); }

 private:
  constexpr explicit Duration(std::int64_t ns) : ns_(ns) {}
  std::int64_t ns_ = 0;
};

// A point in simulated time, measured from the start of the run.
using Time = Duration;

constexpr Duration operator""_us(unsigned long long v) {
  return Duration::from_ns(static_cast<std::int64_t>(v) * 1000);
}

}  // namespace sensesim
