#include "sensesim/medium.hpp"

#include <algorithm>

namespace sensesim {

int slots_elapsed(const Contender& c, Time now, Duration slot) {
  if (now <= c.count_start) return 0;
  return static_cast<int>(std::min<std::int64_t>((now - c.count_start).ns() / slot.ns(), c.counter));
}

std::optional<ContentionOutcome> resolve_contention(std::span<Contender> contenders, Duration slot) {
  if (contenders.empty()) return std::nullopt;
  Time first = Duration::max();
  for (const auto& c : contenders) first = std::min(first, c.expiry(slot));

  ContentionOutcome out{first, {}};
  for (auto& c : contenders) {
    if (c.expiry(slot) == first) {
      out.winners.push_back(c.station);
      c.counter = 0;
    } else {
      const int k = slots_elapsed(c, first, slot);
      c.counter -= k;
      c.count_start += slot * k;
    }
  }
  return out;
}

Time pifs_grab(Time time, Time busy_until, Duration pifs) { return std::max(time, busy_until) + pifs; }

TxopRecord hold_txop(std::span<const Duration> exchanges, Duration limit, Duration sifs) {
  TxopRecord rec;
  for (const Duration& x : exchanges) {
    const Duration gap = rec.exchanges_sent == 0 ? Duration{} : sifs;
    if (rec.occupied + gap + x > limit) {
      rec.unsendable = rec.exchanges_sent == 0;
      break;
    }
    rec.occupied += gap + x;
    ++rec.exchanges_sent;
  }
  return rec;
}

}  // namespace sensesim
