#include "vpon/dba.hpp"

#include <cmath>
#include <stdexcept>

namespace vpon {

std::string to_string(Policy p) {
  switch (p) {
    case Policy::EnhancedCodba: return "enhanced-codba";
    case Policy::ConventionalCodba: return "conventional-codba";
    case Policy::SrDba: return "sr-dba";
  }
  return "?";
}

Policy policy_from_string(const std::string& s) {
  if (s == "enhanced-codba") return Policy::EnhancedCodba;
  if (s == "conventional-codba") return Policy::ConventionalCodba;
  if (s == "sr-dba") return Policy::SrDba;
  throw std::invalid_argument("unknown policy: " + s);
}

namespace {
std::int64_t bytes_per_slot(double rate_bps, double slot_time_s) {
  return static_cast<std::int64_t>(std::ceil(rate_bps * slot_time_s / 8.0));
}
}  // namespace

std::int64_t enhanced_codba_slot_bytes(const CtiReport& cti,
                                       const Split72Params& p) {
  int prbs = cti.scheduled_normal_prbs + cti.cgs_reserved_prbs;
  return bytes_per_slot(split72_rate_bps(p, prbs), p.slot_time_s);
}

std::int64_t conventional_codba_slot_bytes(int scheduled_normal_prbs,
                                           const Split72Params& p,
                                           double headroom_fraction) {
  double rate = split72_rate_bps(p, scheduled_normal_prbs) +
                headroom_fraction * split72_rate_bps(p, p.max_prbs);
  return bytes_per_slot(rate, p.slot_time_s);
}

std::int64_t slot_wire_bytes(int data_prbs, const Split72Params& p) {
  return bytes_per_slot(split72_rate_bps(p, data_prbs), p.slot_time_s);
}

int frames_for_bytes(std::int64_t bytes, int frame_bytes) {
  require(bytes >= 0, "frames_for_bytes: negative byte count");
  return static_cast<int>((bytes + frame_bytes - 1) / frame_bytes);
}

std::vector<int> spread_frames(int frames, int cycles_per_slot) {
  require(frames >= 0 && cycles_per_slot >= 1, "spread_frames: bad input");
  std::vector<int> out(cycles_per_slot, frames / cycles_per_slot);
  int rem = frames % cycles_per_slot;
  for (int i = 0; i < rem; ++i) out[i]++;
  return out;
}

ScaledGrants scale_to_cycle(const std::vector<std::int64_t>& demand_frames,
                            const GrantCycleConfig& gc) {
  const SimTime airtime = gc.frame_airtime_ps();
  std::int64_t total = 0;
  int active = 0;
  for (std::int64_t f : demand_frames) {
    require(f >= 0, "scale_to_cycle: negative demand");
    total += f;
    if (f > 0) ++active;
  }
  ScaledGrants out;
  out.frames.resize(demand_frames.size());
  const SimTime usable = gc.period_ps - static_cast<SimTime>(active) * gc.guard_ps;
  if (total * airtime <= usable) {
    for (std::size_t i = 0; i < demand_frames.size(); ++i)
      out.frames[i] = static_cast<int>(demand_frames[i]);
    return out;
  }
  // Floor scaling against the pre-drop guard count; dropping an ONU to zero
  // frames only frees budget, so the result always fits.
  out.scaled = true;
  for (std::size_t i = 0; i < demand_frames.size(); ++i) {
    __int128 scaled = static_cast<__int128>(demand_frames[i]) * usable /
                      (static_cast<__int128>(total) * airtime);
    out.frames[i] = static_cast<int>(scaled);
  }
  return out;
}

GrantMap sr_dba(const std::vector<StatusReport>& reports,
                const GrantCycleConfig& gc) {
  GrantMap map;
  map.cycle = reports.empty() ? 0 : reports.front().report_cycle + 1;
  std::int64_t total = 0;
  for (const StatusReport& r : reports) {
    require(r.queued_bytes >= 0, "sr_dba: negative report");
    total += r.queued_bytes;
  }
  const std::int64_t budget = gc.cycle_budget_bytes();
  map.scaled = total > budget;
  for (const StatusReport& r : reports) {
    if (r.queued_bytes == 0) continue;
    std::int64_t granted =
        map.scaled ? static_cast<std::int64_t>(
                         static_cast<__int128>(r.queued_bytes) * budget / total)
                   : r.queued_bytes;
    map.allocs.push_back(
        {r.onu, granted, frames_for_bytes(granted, gc.frame_bytes)});
  }
  return map;
}

}  // namespace vpon
