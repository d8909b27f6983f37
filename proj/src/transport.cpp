#include "vpon/transport.hpp"

#include <algorithm>
#include <cmath>

namespace vpon {

std::vector<SimTime> emission_times(SimTime slot_start, SimTime slot_ps,
                                    int frames) {
  require(frames >= 0, "emission_times: negative frame count");
  std::vector<SimTime> out;
  out.reserve(frames);
  for (int k = 1; k <= frames; ++k)
    out.push_back(slot_start + k * slot_ps / frames);
  return out;
}

SliceUplink::SliceUplink(int n_onus, const GrantCycleConfig& gc,
                         std::vector<SimTime> onu_prop_ps)
    : gc_(gc), queues_(n_onus), prop_(std::move(onu_prop_ps)) {
  require(static_cast<int>(prop_.size()) == n_onus,
          "slice uplink: one propagation delay per ONU");
}

void SliceUplink::enqueue(int onu, const EcpriFrame& f) {
  auto& q = queues_[onu];
  require(q.empty() || q.back().ready <= f.ready,
          "slice uplink: frame readiness must be FIFO");
  q.push_back(f);
}

std::int64_t SliceUplink::total_queued() const {
  std::int64_t n = 0;
  for (const auto& q : queues_) n += static_cast<std::int64_t>(q.size());
  return n;
}

std::vector<SliceUplink::Delivery> SliceUplink::run_cycle(
    SimTime cycle_start, const std::vector<int>& granted_frames) {
  require(granted_frames.size() == queues_.size(),
          "slice uplink: one grant entry per ONU");
  const SimTime airtime = gc_.frame_airtime_ps();
  const SimTime cycle_end = cycle_start + gc_.period_ps;

  std::vector<Delivery> out;
  windows_.clear();
  SimTime cursor = cycle_start;
  for (std::size_t onu = 0; onu < queues_.size(); ++onu) {
    int granted = granted_frames[onu];
    if (granted <= 0) continue;
    const SimTime window_start = cursor;
    const SimTime window_end = window_start + granted * airtime;
    require(window_end + gc_.guard_ps <= cycle_end,
            "slice uplink: grants exceed the cycle");
    windows_.push_back({static_cast<int>(onu), window_start, window_end});

    auto& q = queues_[onu];
    SimTime t = window_start;
    while (granted > 0 && !q.empty()) {
      const EcpriFrame& f = q.front();
      SimTime start = std::max(t, f.ready);
      if (start + airtime > window_end) break;
      Delivery d;
      d.frame = f;
      d.onu = static_cast<int>(onu);
      d.line_start = start;
      d.line_end = start + airtime;
      d.delivered_at = d.line_end + prop_[onu];
      out.push_back(d);
      t = d.line_end;
      q.pop_front();
      --granted;
    }
    cursor = window_end + gc_.guard_ps;
  }

  stale_last_ = 0;
  for (const auto& q : queues_)
    for (const EcpriFrame& f : q) {
      if (f.ready > cycle_start) break;
      ++stale_last_;
    }
  if (stale_last_ > 0) ++stale_cycles_;
  return out;
}

BoundaryGatedServer::BoundaryGatedServer(double rate_bps,
                                         SimTime frame_period_ps,
                                         SimTime delivery_prop_ps)
    : ps_per_byte_(8e12 / rate_bps),
      period_(frame_period_ps),
      prop_(delivery_prop_ps) {
  require(rate_bps > 0 && frame_period_ps > 0, "gated server: bad config");
}

BoundaryGatedServer::Done BoundaryGatedServer::enqueue(SimTime now,
                                                       std::int64_t bytes) {
  require(bytes > 0, "gated server: empty batch");
  if (server_free_ < now) {
    // Idle: service starts at the next frame boundary (or now if on one).
    server_free_ = (now + period_ - 1) / period_ * period_;
  }
  server_free_ += static_cast<SimTime>(std::llround(bytes * ps_per_byte_));
  return {server_free_, server_free_ + prop_};
}

SrDbaUplink::SrDbaUplink(const GrantCycleConfig& gc, SimTime up_prop_ps,
                         SimTime down_prop_ps, SimTime app_prop_ps)
    : gc_(gc), up_prop_(up_prop_ps), down_prop_(down_prop_ps),
      app_prop_(app_prop_ps) {}

void SrDbaUplink::enqueue(SimTime now, std::uint64_t batch_id,
                          std::int64_t bytes) {
  (void)now;
  require(bytes > 0, "sr uplink: empty batch");
  q_.push_back({batch_id, bytes});
  ungranted_ += bytes;
}

std::vector<SrDbaUplink::Done> SrDbaUplink::on_cycle(SimTime cycle_start) {
  std::vector<Done> out;
  if (ungranted_ <= 0) return out;
  std::int64_t grant = std::min(ungranted_, gc_.cycle_budget_bytes());
  ungranted_ -= grant;

  const SimTime report_at_olt = cycle_start + up_prop_;
  const SimTime grant_issued =
      (report_at_olt + gc_.period_ps - 1) / gc_.period_ps * gc_.period_ps;
  const SimTime drain_start = grant_issued + down_prop_ + gc_.onu_response_ps;
  line_free_ = std::max(line_free_, drain_start);

  while (grant > 0 && !q_.empty()) {
    Batch& b = q_.front();
    std::int64_t take = std::min(b.remaining, grant);
    line_free_ += take * gc_.ps_per_byte();
    b.remaining -= take;
    grant -= take;
    if (b.remaining == 0) {
      out.push_back({b.id, line_free_, line_free_ + app_prop_});
      q_.pop_front();
    }
  }
  return out;
}

}  // namespace vpon
