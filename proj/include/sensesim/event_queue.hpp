#pragma once

#include <cstdint>
#include <queue>
#include <string_view>
#include <vector>

#include "sensesim/time.hpp"

namespace sensesim {

// Declaration order is the tiebreak order at equal timestamps.
enum class EventKind : std::uint8_t { WindowOpen, WindowClose, BackoffExpiry, FrameEnd, TxopEnd, SimEnd };

constexpr std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::WindowOpen: return "WindowOpen";
    case EventKind::WindowClose: return "WindowClose";
    case EventKind::BackoffExpiry: return "BackoffExpiry";
    case EventKind::FrameEnd: return "FrameEnd";
    case EventKind::TxopEnd: return "TxopEnd";
    case EventKind::SimEnd: return "SimEnd";
  }
  return "?";
}

struct Event {
  Time timestamp;
  EventKind kind;
  std::int64_t subject = 0;  // station id or window index
  std::uint64_t token = 0;   // generation tag for cancellable events
  std::uint64_t seq = 0;     // insertion order, assigned by the queue
};

class EventQueue {
 public:
  void push(Event e) {
    e.seq = next_seq_++;
    heap_.push(e);
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  const Event& top() const { return heap_.top(); }

  Event pop() {
    Event e = heap_.top();
    heap_.pop();
    return e;
  }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.timestamp != b.timestamp) return a.timestamp > b.timestamp;
      if (a.kind != b.kind) return a.kind > b.kind;
      if (a.subject != b.subject) return a.subject > b.subject;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace sensesim
