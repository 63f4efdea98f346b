#include "sensesim/simulator.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sensesim/airtime.hpp"
#include "sensesim/event_queue.hpp"
#include "sensesim/traffic.hpp"

namespace sensesim {

namespace {

std::string fmt_us(Time t) {
  char buf[32];
  const std::int64_t ns = t.ns();
  std::snprintf(buf, sizeof buf, "%lld.%03lld", static_cast<long long>(ns / 1000), static_cast<long long>(ns % 1000));
  return buf;
}

enum class Busy { Data, Sensing, Collision };

struct Station {
  EdcaState edca;
  RandomStream rng;
  Contender slot_state;
};

class Engine {
 public:
  Engine(const SimParams& p, const RunOptions& opt)
      : p_(p),
        opt_(opt),
        air_(p),
        burst_(data_burst(p, air_)),
        end_(p.sim_duration()),
        aifs_(p.aifs()),
        slot_(p.timing.slot),
        windows_(window_count(p)),
        saw_(p.access_method == AccessMethod::NoSensing ? Duration{} : saw_duration_us(p.saw_duration_code)) {
    stations_.reserve(static_cast<std::size_t>(p.n_sta) + 1);
    for (StationId id = 0; id <= p.n_sta; ++id) {
      stations_.push_back(Station{EdcaState(p.edca), RandomStream(p.rng_seed, id), Contender{id, aifs_, 0}});
      if (id != kApId) draw(stations_.back());
    }
    result_.params = p;
  }

  RunResult run() {
    queue_.push(Event{end_, EventKind::SimEnd, 0});
    if (windows_ > 0) queue_.push(Event{Time{}, EventKind::WindowOpen, 0});
    schedule_access(Time{});

    while (!queue_.empty()) {
      const Event ev = queue_.pop();
      now_ = ev.timestamp;
      switch (ev.kind) {
        case EventKind::WindowOpen: on_window_open(ev); break;
        case EventKind::WindowClose: on_window_close(ev); break;
        case EventKind::BackoffExpiry:
          if (ev.token == access_token_) on_access();
          break;
        case EventKind::FrameEnd: trace_frame(ev); break;
        case EventKind::TxopEnd: on_txop_end(ev); break;
        case EventKind::SimEnd:
          on_sim_end();
          return std::move(result_);
      }
    }
    return std::move(result_);
  }

 private:
  // --- bookkeeping -----------------------------------------------------

  MetricsAccumulator& metrics() { return result_.metrics; }

  void trace(Time t, EventKind k, std::int64_t subject, const std::string& detail) {
    if (opt_.trace == nullptr) return;
    *opt_.trace << fmt_us(t) << ',' << to_string(k) << ',' << subject << ',' << detail << '\n';
  }

  void draw(Station& s) { s.slot_state.counter = s.edca.draw_backoff(s.rng); }

  bool ap_pending() const {
    return planner_ && !ap_done_ && !planner_->done() && !planner_->exhausted();
  }

  bool ap_contends() const { return p_.access_method == AccessMethod::EdcaAccess && ap_pending(); }

  bool pifs_priority() const { return p_.access_method == AccessMethod::PifsAccess && ap_pending(); }

  // Start of the next window strictly after t, if any.
  std::optional<Time> next_window_open(Time t) const {
    if (windows_ == 0) return std::nullopt;
    const Duration period = saw_period_us(p_.saw_period_code);
    const std::int64_t k = t.ns() / period.ns() + 1;
    if (k >= windows_) return std::nullopt;
    return period * k;
  }

  void account_gap(Time until, bool idle) {
    if (until <= acct_cursor_) return;
    const Duration gap = until - acct_cursor_;
    if (idle) {
      metrics().add_idle(gap);
    } else {
      metrics().add_contention(gap);
    }
    acct_cursor_ = until;
  }

  // Marks [s, e) busy; clipped at the end of the run.
  void occupy(Time s, Time e, Busy kind) {
    account_gap(s, false);
    const Time ce = std::min(e, end_);
    const Duration d = ce > s ? ce - s : Duration{};
    switch (kind) {
      case Busy::Data: metrics().add_data_airtime(d); break;
      case Busy::Sensing: metrics().add_sensing_airtime(d); break;
      case Busy::Collision: metrics().add_collision(d); break;
    }
    acct_cursor_ = std::max(acct_cursor_, ce);
    busy_ = true;
    busy_end_ = e;
    busy_kind_ = kind;
    if (kind != Busy::Sensing) charge_lost(s, e);
    queue_.push(Event{e, EventKind::TxopEnd, 0});
  }

  // Non-sensing occupation inside an open window while the AP still has
  // something it could send there.
  void charge_lost(Time s, Time e) {
    if (!ap_pending()) return;
    const SawWindow& w = planner_->window();
    const Time a = std::max(s, w.open_time);
    const Time b = std::min(e, w.close_time);
    if (b > a) planner_->ledger().lost += b - a;
  }

  void emit_frame(const Frame& f, bool collided) {
    if (f.kind == FrameKind::CsiReport && !collided) metrics().add_sensing_bytes(f.bytes);
    if (opt_.on_frame) opt_.on_frame(f, collided);
    if (opt_.trace != nullptr) {
      traced_.push_back({f, collided});
      queue_.push(Event{f.end(), EventKind::FrameEnd, f.tx, traced_.size() - 1});
    }
  }

  void trace_frame(const Event& ev) {
    const auto& [f, collided] = traced_[ev.token];
    trace(ev.timestamp, EventKind::FrameEnd, ev.subject,
          std::string("frame=") + to_string(f.kind) + ";start_us=" + fmt_us(f.start) + ";end_us=" + fmt_us(f.end()) +
              ";bytes=" + std::to_string(f.bytes) + ";ok=" + (collided ? "0" : "1"));
  }

  // --- medium access ---------------------------------------------------

  void freeze_all(Time t) {
    for (auto& s : stations_) {
      const int k = slots_elapsed(s.slot_state, t, slot_);
      s.slot_state.counter -= k;
      s.slot_state.count_start += slot_ * k;
    }
  }

  // Chooses the next access on an idle medium and schedules it.
  void schedule_access(Time t) {
    ++access_token_;
    pifs_grant_ = false;
    if (busy_) return;

    if (pifs_priority()) {
      const Time grant = pifs_grab(std::max(t, planner_->window().open_time), idle_since_, p_.timing.pifs());
      if (grant < planner_->window().close_time) {
        pifs_grant_ = true;
        queue_.push(Event{grant, EventKind::BackoffExpiry, kApId, access_token_});
        return;
      }
      ap_done_ = true;
    }

    Time first = Duration::max();
    for (StationId id = 1; id <= p_.n_sta; ++id) {
      first = std::min(first, stations_[static_cast<std::size_t>(id)].slot_state.expiry(slot_));
    }
    if (ap_contends()) first = std::min(first, stations_[kApId].slot_state.expiry(slot_));

    // With PIFS access STAs keep data exchanges clear of the next window
    // opening, so the AP finds the medium free there.
    if (p_.access_method == AccessMethod::PifsAccess && !ap_contends()) {
      if (auto open = next_window_open(t); open && first >= t && first + burst_.cycle > *open && first < *open) {
        blocked_at_ = first;
        return;  // the WindowOpen event resumes access
      }
    }
    blocked_at_.reset();
    queue_.push(Event{first, EventKind::BackoffExpiry, -1, access_token_});
  }

  void on_access() {
    if (pifs_grant_) {
      freeze_all(now_);
      run_sensing_txop(now_);
      return;
    }

    std::vector<Contender> cs;
    for (StationId id = 1; id <= p_.n_sta; ++id) cs.push_back(stations_[static_cast<std::size_t>(id)].slot_state);
    if (ap_contends()) cs.push_back(stations_[kApId].slot_state);
    auto outcome = resolve_contention(cs, slot_);
    for (const auto& c : cs) stations_[static_cast<std::size_t>(c.station)].slot_state = c;
    trace(now_, EventKind::BackoffExpiry, outcome->winners.size() == 1 ? outcome->winners.front() : -1,
          outcome->collided() ? "collision" : "access");

    if (outcome->collided()) {
      Duration longest{};
      for (StationId id : outcome->winners) {
        const Duration d = id == kApId ? planner_->next_first_frame() : burst_.ampdu_airtime;
        longest = std::max(longest, d);
        emit_frame(Frame{id == kApId ? FrameKind::Ndpa : FrameKind::Ampdu, now_, d, 0, id, 0}, true);
        auto& st = stations_[static_cast<std::size_t>(id)];
        st.edca.on_collision();
        draw(st);
      }
      occupy(now_, now_ + longest, Busy::Collision);
      return;
    }

    const StationId winner = outcome->winners.front();
    auto& st = stations_[static_cast<std::size_t>(winner)];
    st.edca.on_success();
    draw(st);
    if (winner == kApId) {
      run_sensing_txop(now_);
    } else {
      run_data_txop(winner, now_);
    }
  }

  void run_data_txop(StationId sta, Time start) {
    Duration limit = p_.txop_limit;
    if (p_.access_method == AccessMethod::PifsAccess) {
      if (auto open = next_window_open(start); open) limit = std::min(limit, *open - start);
    }
    const DataTxop txop = fill_data_txop(burst_, limit, p_.timing.sifs);
    Time t = start;
    for (int c = 0; c < txop.cycles; ++c) {
      if (c > 0) t += p_.timing.sifs;
      emit_frame(Frame{FrameKind::Ampdu, t, burst_.ampdu_airtime, burst_.ampdu_bits / 8, sta, kMaxSubcarriers80MHz},
                 false);
      const Time ba = t + burst_.ampdu_airtime + p_.timing.sifs;
      emit_frame(Frame{FrameKind::BlockAck, ba, air_.block_ack(), p_.frames.block_ack_bytes, kApId, 0}, false);
      t = ba + air_.block_ack();
      if (t <= end_) metrics().add_data_bits(burst_.ampdu_bits);
    }
    if (txop.cycles == 0) {
      // Nothing fits before the window opens; the STA keeps its turn.
      schedule_access(now_);
      return;
    }
    occupy(start, start + txop.occupied, Busy::Data);
  }

  void run_sensing_txop(Time start) {
    const TxopPlan plan = planner_->plan_txop(start, p_.txop_limit);
    if (plan.frames.empty()) {
      ap_done_ = true;
      for (auto& s : stations_) s.slot_state.count_start = std::max(s.slot_state.count_start, now_);
      schedule_access(now_);
      return;
    }
    for (const Frame& f : plan.frames) emit_frame(f, false);
    occupy(start, plan.end, Busy::Sensing);
  }

  void on_txop_end(const Event& ev) {
    if (!busy_ || ev.timestamp != busy_end_) return;
    trace(now_, EventKind::TxopEnd, 0, "");
    busy_ = false;
    idle_since_ = now_;
    for (auto& s : stations_) s.slot_state.count_start = now_ + aifs_;
    schedule_access(now_);
  }

  // --- windows -----------------------------------------------------------

  void on_window_open(const Event& ev) {
    const SawWindow w = window_at(p_, ev.subject);
    trace(now_, EventKind::WindowOpen, ev.subject, "close_us=" + fmt_us(w.close_time));
    if (blocked_at_) {
      account_gap(*blocked_at_, false);
      account_gap(now_, true);
      blocked_at_.reset();
    }
    planner_.emplace(p_, air_, w);
    ap_done_ = false;
    if (busy_ && busy_kind_ != Busy::Sensing) charge_lost(w.open_time, busy_end_);

    if (p_.access_method == AccessMethod::EdcaAccess) {
      auto& ap = stations_[kApId];
      draw(ap);
      Time start = busy_ ? busy_end_ + aifs_ : idle_since_ + aifs_;
      if (now_ > start) start += slot_ * (((now_ - start).ns() + slot_.ns() - 1) / slot_.ns());
      ap.slot_state.count_start = start;
    }

    queue_.push(Event{w.close_time, EventKind::WindowClose, ev.subject});
    if (ev.subject + 1 < windows_) {
      queue_.push(Event{window_at(p_, ev.subject + 1).open_time, EventKind::WindowOpen, ev.subject + 1});
    }
    if (!busy_) {
      freeze_all(now_);
      schedule_access(now_);
    }
  }

  void on_window_close(const Event& ev) {
    SawWindowLedger l = planner_->ledger();
    l.classification = classify_window(l);
    l.available_sensing = saw_ - l.lost;
    metrics().add_window(l, saw_);
    if (opt_.on_window) opt_.on_window(l);
    trace(now_, EventKind::WindowClose, ev.subject, std::string("class=") + std::string(to_string(l.classification)));
    planner_.reset();
    // Whatever sensing exchange the AP still had queued is dropped.
    stations_[kApId].edca.reset();
    if (!busy_) {
      freeze_all(now_);
      schedule_access(now_);
    }
  }

  void on_sim_end() {
    if (!busy_) {
      if (blocked_at_) account_gap(std::min(*blocked_at_, end_), false);
      account_gap(end_, blocked_at_.has_value());
    }
    metrics().set_sim_time(end_);
    trace(now_, EventKind::SimEnd, 0, "");
  }

  const SimParams& p_;
  const RunOptions& opt_;
  AirtimeModel air_;
  DataBurst burst_;
  Time end_;
  Duration aifs_;
  Duration slot_;
  std::int64_t windows_;
  Duration saw_;

  EventQueue queue_;
  Time now_{};
  std::vector<Station> stations_;
  RunResult result_;

  bool busy_ = false;
  Time busy_end_{};
  Busy busy_kind_ = Busy::Data;
  Time idle_since_{};
  Time acct_cursor_{};
  std::optional<Time> blocked_at_;

  std::uint64_t access_token_ = 0;
  bool pifs_grant_ = false;
  std::optional<SmePlanner> planner_;
  bool ap_done_ = false;

  std::vector<std::pair<Frame, bool>> traced_;
};

}  // namespace

RunResult simulate(const SimParams& params, const RunOptions& options) {
  validate(params);
  Engine engine(params, options);
  return engine.run();
}

}  // namespace sensesim
