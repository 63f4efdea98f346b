#include "sensesim/sensing.hpp"

#include <algorithm>

namespace sensesim {

std::int64_t window_count(const SimParams& p) {
  if (p.access_method == AccessMethod::NoSensing) return 0;
  return p.sim_duration().ns() / saw_period_us(p.saw_period_code).ns();
}

SawWindow window_at(const SimParams& p, std::int64_t index) {
  const Time open = saw_period_us(p.saw_period_code) * index;
  return SawWindow{index, open, open + saw_duration_us(p.saw_duration_code)};
}

std::vector<SawWindow> schedule_windows(const SimParams& p) {
  std::vector<SawWindow> out;
  const std::int64_t n = window_count(p);
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(window_at(p, i));
  return out;
}

SensingDemand make_demand(const SimParams& p) {
  SensingDemand d;
  d.num_app = p.num_app;
  d.n_sta = p.n_sta;
  d.report_bytes = csi_size_bytes(p.stra.tx, p.stra.rx, p.n_b, p.n_sc);
  if (p.sounding == SoundingMode::Joint) {
    d.round_stas.push_back(p.n_sta);
    d.round_streams.push_back(p.stra.tx);
  } else {
    const int per_round = stas_per_sounding_round(p.ap_antennas, p.stra);
    for (int left = p.n_sta; left > 0; left -= per_round) {
      const int stas = std::min(left, per_round);
      d.round_stas.push_back(stas);
      d.round_streams.push_back(std::min(stas * p.stra.tx, p.ap_antennas));
    }
  }
  return d;
}

std::string_view to_string(WindowClass c) {
  switch (c) {
    case WindowClass::Complete: return "complete";
    case WindowClass::PartiallyMissed: return "partial";
    case WindowClass::CompletelyMissed: return "missed";
  }
  return "?";
}

WindowClass classify_window(const SawWindowLedger& l) {
  if (l.sent_bytes == l.required_bytes && l.sounding_rounds_done == l.sounding_rounds_required) {
    return WindowClass::Complete;
  }
  if (l.sent_bytes == 0 && l.sounding_rounds_done == 0) return WindowClass::CompletelyMissed;
  return WindowClass::PartiallyMissed;
}

std::int64_t send_partial_report(Duration remaining, std::int64_t full_report_bytes, int ru_tones,
                                 const McsEntry& mcs, int n_ss, const FrameSizeModel& model) {
  if (remaining >= report_airtime_us(full_report_bytes, ru_tones, mcs, n_ss, model)) {
    throw DomainError("partial report requested although the full report fits");
  }
  return report_bytes_fitting(remaining, full_report_bytes, ru_tones, mcs, n_ss, model);
}

SmePlanner::SmePlanner(const SimParams& p, const AirtimeModel& air, const SawWindow& window)
    : air_(&air), window_(window), sifs_(p.timing.sifs), n_sta_(p.n_sta) {
  const SensingDemand d = make_demand(p);
  for (int app = 0; app < d.num_app; ++app) {
    for (int r = 0; r < d.rounds_per_app(); ++r) {
      exchanges_.push_back({false, d.round_stas[static_cast<std::size_t>(r)],
                            d.round_streams[static_cast<std::size_t>(r)]});
    }
    exchanges_.push_back({true, d.n_sta, 0});
  }
  ledger_.window_index = window.index;
  ledger_.required_bytes = d.required_bytes();
  ledger_.sounding_rounds_required = d.required_rounds();
  if (exchanges_.empty()) ledger_.completed_at = window.open_time;
}

Duration SmePlanner::next_first_frame() const {
  if (done()) return Duration{};
  const Exchange& x = exchanges_[next_];
  return x.report ? air_->trigger() : air_->ndpa(x.stas);
}

void SmePlanner::emit(std::vector<Frame>& out, FrameKind kind, Time start, Duration airtime, std::int64_t bytes) {
  out.push_back(Frame{kind, start, airtime, bytes, kApId, kind == FrameKind::CsiReport ? air_->report_ru() : 0});
}

TxopPlan SmePlanner::plan_txop(Time start, Duration txop_limit) {
  TxopPlan plan{{}, start, exhausted_};
  if (exhausted_) return plan;
  const Time close = window_.close_time;
  const Time txop_end = start + txop_limit;
  Time t = start;
  bool first = true;

  while (!done()) {
    const Exchange& x = exchanges_[next_];
    const Time s = first ? t : t + sifs_;
    const Duration lead = x.report ? air_->trigger() : air_->ndpa(x.stas);
    const Duration tail = x.report ? air_->report() : air_->ndp(x.streams);
    const Time e = s + lead + sifs_ + tail;

    if (e <= std::min(close, txop_end)) {
      emit(plan.frames, x.report ? FrameKind::ReportTrigger : FrameKind::Ndpa, s, lead, 0);
      if (x.report) {
        emit(plan.frames, FrameKind::CsiReport, s + lead + sifs_, tail, air_->csi_bytes() * n_sta_);
        ledger_.sent_bytes += air_->csi_bytes() * n_sta_;
      } else {
        emit(plan.frames, FrameKind::Ndp, s + lead + sifs_, tail, 0);
        ++ledger_.sounding_rounds_done;
      }
      t = e;
      first = false;
      ++next_;
      if (done()) ledger_.completed_at = e;
      continue;
    }

    // The exchange does not fit. A report is cut at whichever bound can never
    // be lifted: the window close, or the TxOP limit when a whole TxOP is too
    // short for it.
    const bool close_binds = close <= txop_end;
    if (x.report && (close_binds || first)) {
      const Time cut = close_binds ? close : txop_end;
      const Time report_start = s + lead + sifs_;
      const std::int64_t bytes = report_start < cut ? air_->partial_report_bytes(cut - report_start) : 0;
      if (bytes > 0) {
        emit(plan.frames, FrameKind::ReportTrigger, s, lead, 0);
        emit(plan.frames, FrameKind::CsiReport, report_start, cut - report_start, bytes * n_sta_);
        ledger_.sent_bytes += bytes * n_sta_;
        t = cut;
      }
      exhausted_ = true;
    } else if (e > close || first) {
      exhausted_ = true;
    }
    break;
  }
  plan.end = t;
  plan.exhausted = exhausted_;
  return plan;
}

SawWindowLedger run_sme(const SimParams& p, const AirtimeModel& air, const SawWindow& window,
                        const AccessFn& acquire) {
  SmePlanner planner(p, air, window);
  std::optional<Time> grant = acquire(window.open_time);
  while (!planner.done() && !planner.exhausted() && grant && *grant < window.close_time) {
    const TxopPlan plan = planner.plan_txop(*grant, p.txop_limit);
    grant = acquire(plan.end);
  }
  SawWindowLedger l = planner.ledger();
  l.classification = classify_window(l);
  l.available_sensing = saw_duration_us(p.saw_duration_code) - l.lost;
  return l;
}

}  // namespace sensesim
