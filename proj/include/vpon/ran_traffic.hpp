#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "vpon/rate_model.hpp"
#include "vpon/sim_core.hpp"

namespace vpon {

// Per-RU slotted uplink scheduler: URLLC rides the semi-static CGS pool and
// transmits in the next slot with a free seat; normal traffic requests at a
// slot boundary and transmits exactly four slots later. Each admitted user
// occupies 5 PRBs for one slot.

struct NumerologyConfig {
  int mu;
  double slot_time_s;
  int max_prbs;
  double symbol_time_s;
  SimTime slot_ps;
};

NumerologyConfig numerology(int mu);  // mu in {1, 2}

struct CgsConfig {
  double reserved_fraction;
  int reserved_prbs;
};

// reserved_prbs = floor(fraction * max_prbs); requires 0 < reserved < max.
CgsConfig make_cgs(const NumerologyConfig& num, double fraction);

enum class TrafficClass : std::uint8_t { Urllc = 0, Normal = 1 };

inline constexpr int kPrbsPerUser = 5;
inline constexpr int kNormalGrantLagSlots = 4;

struct TrafficArrival {
  SimTime arrive_at;
  TrafficClass cls;
  int ru;
  std::uint32_t packet;
};

// Scheduling information the DU forwards to the OLT: normal-traffic PRBs of a
// slot are known four slots ahead; the CGS reservation is reported in full
// regardless of actual URLLC occupancy.
struct CtiReport {
  std::int64_t target_slot;
  int ru;
  int scheduled_normal_prbs;
  int cgs_reserved_prbs;
};

struct SlotRecord {
  std::int64_t slot = 0;
  int urllc_users = 0;
  int normal_users = 0;
  std::vector<std::uint32_t> urllc_packets;
  std::vector<std::uint32_t> normal_packets;
  bool finalized = false;
};

struct Admission {
  std::uint32_t packet;
  TrafficClass cls;
  std::int64_t slot;          // transmit slot
  std::int64_t request_slot;  // boundary that issued it (== slot for URLLC)
  std::int64_t deferrals;     // slots waited beyond the earliest eligible one
};

class RanScheduler {
 public:
  RanScheduler(const NumerologyConfig& num, const CgsConfig& cgs, int ru);

  int urllc_seats() const { return urllc_seats_; }
  int normal_seats() const { return normal_seats_; }

  // Arrivals must be fed in non-decreasing arrive_at order per class.
  void enqueue(const TrafficArrival& a);

  // Processes boundary n (time n * slot_ps): admits queued URLLC into slot n,
  // queued normal requests into slot n+4, finalizes slot n's occupancy.
  // Boundaries must be processed consecutively starting at 0.
  std::vector<Admission> on_boundary(std::int64_t n);

  // Convenience for single-arrival scenarios: enqueues and processes
  // boundaries until this arrival is admitted; returns its transmit slot.
  std::int64_t admit_arrival(const TrafficArrival& a);

  // (data_prb_count, urllc_users, normal_users) of a finalized slot.
  struct Occupancy {
    int data_prbs;
    int urllc_users;
    int normal_users;
  };
  Occupancy slot_occupancy(std::int64_t slot) const;

  // Valid once boundary target_slot - 4 has been processed.
  CtiReport cti_lookahead(std::int64_t target_slot) const;

  const SlotRecord* slot_record(std::int64_t slot) const;
  // Removes a finalized slot's record, returning it.
  SlotRecord take_slot(std::int64_t slot);

  bool idle() const { return urllc_wait_.empty() && normal_wait_.empty(); }
  std::size_t queued(TrafficClass c) const {
    return c == TrafficClass::Urllc ? urllc_wait_.size() : normal_wait_.size();
  }
  std::int64_t last_boundary() const { return last_boundary_; }
  const CgsConfig& cgs() const { return cgs_; }
  const NumerologyConfig& config() const { return num_; }

 private:
  SlotRecord& record(std::int64_t slot);

  NumerologyConfig num_;
  CgsConfig cgs_;
  int ru_;
  int urllc_seats_;
  int normal_seats_;
  std::int64_t last_boundary_ = -1;
  std::deque<TrafficArrival> urllc_wait_;
  std::deque<TrafficArrival> normal_wait_;
  std::map<std::int64_t, SlotRecord> slots_;
};

// Solves the per-RU arrival rate so the expected fronthaul wire rate of
// n_rus identical RUs hits the requested share of PON capacity. Each admitted
// user adds slope * 5 PRBs for one slot: 49,920 wire bits, independent of
// slot time.
struct LoadCalibration {
  double lambda_total_per_s;
  double lambda_urllc_per_s;
  double lambda_normal_per_s;
  double idle_floor_bps;
  double per_ru_target_bps;
  double wire_bits_per_user_slot;
};

LoadCalibration calibrate_load(double load_pct, int n_rus, double capacity_bps,
                               const Split72Params& p, double urllc_share);

}  // namespace vpon
