#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpon/ran_traffic.hpp"
#include "vpon/sim_core.hpp"

namespace vpon {

// Per-grant-cycle uplink allocation under three policies. Co-DBA variants
// size grants from the CTI lookahead per target slot and spread them over the
// integer number of cycles spanning the slot; SR-DBA sizes grants from queue
// reports one cycle behind. Overload scales allocations proportionally.

struct GrantCycleConfig {
  SimTime period_ps = 125 * kMicrosecond;
  SimTime onu_response_ps = 35 * kMicrosecond;
  double uplink_bps = 50e9;
  int frame_bytes = 2048;
  SimTime guard_ps = 100 * kNanosecond;  // per ONU burst window

  SimTime ps_per_byte() const {
    return static_cast<SimTime>(8e12 / uplink_bps);  // 160 ps at 50 Gbps
  }
  SimTime frame_airtime_ps() const { return frame_bytes * ps_per_byte(); }
  std::int64_t cycle_budget_bytes() const {
    return static_cast<std::int64_t>(period_ps / ps_per_byte());
  }
};

enum class Policy : std::uint8_t { EnhancedCodba, ConventionalCodba, SrDba };

std::string to_string(Policy p);
Policy policy_from_string(const std::string& s);

struct GrantAlloc {
  int onu;
  std::int64_t bytes;
  int frames;
};

struct GrantMap {
  std::int64_t cycle;
  std::vector<GrantAlloc> allocs;  // at most one per ONU
  bool scaled = false;
};

struct StatusReport {
  int onu;
  std::int64_t report_cycle;
  std::int64_t queued_bytes;
};

// Wire bytes a slot needs under the enhanced policy: scheduled normal PRBs
// plus the full CGS reservation, conservatively, whatever URLLC actually
// sends.
std::int64_t enhanced_codba_slot_bytes(const CtiReport& cti,
                                       const Split72Params& p);

// Conventional baseline: scheduled normal PRBs plus a fixed headroom share of
// the RU's full-load rate (default 5%).
std::int64_t conventional_codba_slot_bytes(int scheduled_normal_prbs,
                                           const Split72Params& p,
                                           double headroom_fraction = 0.05);

// Wire bytes the RU actually emits for a finalized slot's occupancy.
std::int64_t slot_wire_bytes(int data_prbs, const Split72Params& p);

int frames_for_bytes(std::int64_t bytes, int frame_bytes = 2048);

// Distributes a slot's frames over its grant cycles, remainder to the
// earliest cycles; cumulative grants then always cover cumulative frame
// readiness under in-slot streaming emission.
std::vector<int> spread_frames(int frames, int cycles_per_slot);

// Caps per-ONU frame demands so burst airtime plus one guard per active ONU
// fits the cycle; proportional floor scaling, deterministic.
struct ScaledGrants {
  std::vector<int> frames;
  bool scaled = false;
};
ScaledGrants scale_to_cycle(const std::vector<std::int64_t>& demand_frames,
                            const GrantCycleConfig& gc);

// Grants for cycle n+1 from cycle-n reports: each ONU gets its reported
// backlog, scaled proportionally when the sum exceeds the cycle budget.
GrantMap sr_dba(const std::vector<StatusReport>& reports,
                const GrantCycleConfig& gc);

}  // namespace vpon
