#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "vpon/dba.hpp"
#include "vpon/sim_core.hpp"

namespace vpon {

// Data path pieces: eCPRI packetization streamed across the radio slot, the
// tier-1 TDMA uplink line, the tier-2 boundary-gated downlink server, and the
// status-report uplink leg toward the central office.

struct EcpriFrame {
  SimTime ready;       // instant the frame exists at the ONU
  std::int64_t slot;
  int ru;
};

// Frame k of a slot's stream becomes ready at
// slot_start + (k+1) * slot_ps / frames: evenly paced, last exactly at the
// slot end, mirroring symbol-by-symbol fronthaul emission.
std::vector<SimTime> emission_times(SimTime slot_start, SimTime slot_ps,
                                    int frames);

// Frame count for a byte payload, last frame padded.
// (see frames_for_bytes in dba.hpp)

// One vPON slice's upstream: per-ONU FIFO queues drained through one TDMA
// window per ONU per 125 us cycle, windows in ONU order separated by the
// burst guard. A granted frame transmits when it is ready by its line turn
// and fits before the window closes; the rest carry to a later cycle.
class SliceUplink {
 public:
  SliceUplink(int n_onus, const GrantCycleConfig& gc,
              std::vector<SimTime> onu_prop_ps);

  void enqueue(int onu, const EcpriFrame& f);

  struct Delivery {
    EcpriFrame frame;
    int onu;
    SimTime line_start;
    SimTime line_end;
    SimTime delivered_at;  // line_end + ONU->OLT propagation
  };
  struct WindowAudit {
    int onu;
    SimTime start;
    SimTime end;
  };

  std::vector<Delivery> run_cycle(SimTime cycle_start,
                                  const std::vector<int>& granted_frames);

  std::int64_t queued_frames(int onu) const {
    return static_cast<std::int64_t>(queues_[onu].size());
  }
  std::int64_t total_queued() const;
  const std::vector<WindowAudit>& last_windows() const { return windows_; }

  // Frames that were ready before the cycle started yet are still queued
  // after it ran: zero in unscaled operation thanks to the one-cycle grant
  // lag.
  std::int64_t stale_after_last_cycle() const { return stale_last_; }
  std::uint64_t stale_cycle_count() const { return stale_cycles_; }

 private:
  GrantCycleConfig gc_;
  std::vector<std::deque<EcpriFrame>> queues_;
  std::vector<SimTime> prop_;
  std::vector<WindowAudit> windows_;
  std::int64_t stale_last_ = 0;
  std::uint64_t stale_cycles_ = 0;
};

// FIFO fluid queue drained at a fixed rate; service of an idle queue starts
// only at the next frame boundary (125 us grid). Batches arriving during a
// busy period extend it back-to-back.
class BoundaryGatedServer {
 public:
  BoundaryGatedServer(double rate_bps, SimTime frame_period_ps,
                      SimTime delivery_prop_ps);

  struct Done {
    SimTime completed;
    SimTime delivered;
  };
  // bytes > 0; completion instants are non-decreasing across calls made in
  // time order.
  Done enqueue(SimTime now, std::int64_t bytes);

  SimTime busy_until() const { return server_free_; }

 private:
  double ps_per_byte_;
  SimTime period_;
  SimTime prop_;
  SimTime server_free_ = -1;
};

// Status-report uplink toward the CO: at each cycle boundary the ONU reports
// its un-granted backlog; the grant's drain window opens after the upstream
// report propagation, alignment to the OLT's next cycle, the downstream
// grant propagation, and the ONU response time; granted bytes then serialize
// on the line at full rate.
class SrDbaUplink {
 public:
  SrDbaUplink(const GrantCycleConfig& gc, SimTime up_prop_ps,
              SimTime down_prop_ps, SimTime app_prop_ps);

  void enqueue(SimTime now, std::uint64_t batch_id, std::int64_t bytes);

  struct Done {
    std::uint64_t batch_id;
    SimTime completed;   // last byte leaves the line
    SimTime delivered;   // + propagation to the application
  };
  std::vector<Done> on_cycle(SimTime cycle_start);

  std::int64_t ungranted_bytes() const { return ungranted_; }
  SimTime line_free() const { return line_free_; }

 private:
  struct Batch {
    std::uint64_t id;
    std::int64_t remaining;
  };
  GrantCycleConfig gc_;
  SimTime up_prop_;
  SimTime down_prop_;
  SimTime app_prop_;
  std::deque<Batch> q_;
  std::int64_t ungranted_ = 0;
  SimTime line_free_ = 0;
};

}  // namespace vpon
