#include "vpon/ran_traffic.hpp"

#include <cmath>
#include <stdexcept>

namespace vpon {

NumerologyConfig numerology(int mu) {
  if (mu != 1 && mu != 2) throw std::invalid_argument("numerology must be 1 or 2");
  NumerologyConfig n;
  n.mu = mu;
  n.slot_time_s = (mu == 1) ? 0.5e-3 : 0.25e-3;
  n.max_prbs = (mu == 1) ? 270 : 135;
  n.symbol_time_s = 1e-3 / (14.0 * (1 << mu));
  n.slot_ps = (mu == 1) ? 500 * kMicrosecond : 250 * kMicrosecond;
  return n;
}

CgsConfig make_cgs(const NumerologyConfig& num, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw std::invalid_argument("cgs fraction must be in (0, 1)");
  int prbs = static_cast<int>(fraction * num.max_prbs);
  if (prbs <= 0 || prbs >= num.max_prbs)
    throw std::invalid_argument("cgs reservation must leave room for both classes");
  return CgsConfig{fraction, prbs};
}

RanScheduler::RanScheduler(const NumerologyConfig& num, const CgsConfig& cgs,
                           int ru)
    : num_(num),
      cgs_(cgs),
      ru_(ru),
      urllc_seats_(cgs.reserved_prbs / kPrbsPerUser),
      normal_seats_((num.max_prbs - cgs.reserved_prbs) / kPrbsPerUser) {
  require(urllc_seats_ > 0, "cgs reservation smaller than one user");
  require(normal_seats_ > 0, "dynamic pool smaller than one user");
}

SlotRecord& RanScheduler::record(std::int64_t slot) {
  auto [it, inserted] = slots_.try_emplace(slot);
  if (inserted) it->second.slot = slot;
  return it->second;
}

void RanScheduler::enqueue(const TrafficArrival& a) {
  require(a.ru == ru_, "arrival routed to the wrong RU");
  auto& q = (a.cls == TrafficClass::Urllc) ? urllc_wait_ : normal_wait_;
  require(q.empty() || q.back().arrive_at <= a.arrive_at,
          "arrivals must be enqueued in time order");
  q.push_back(a);
}

std::vector<Admission> RanScheduler::on_boundary(std::int64_t n) {
  require(n == last_boundary_ + 1, "boundaries must be processed in order");
  last_boundary_ = n;
  const SimTime t = n * num_.slot_ps;
  std::vector<Admission> admitted;

  SlotRecord& urllc_slot = record(n);
  while (!urllc_wait_.empty() && urllc_wait_.front().arrive_at <= t &&
         urllc_slot.urllc_users < urllc_seats_) {
    TrafficArrival a = urllc_wait_.front();
    urllc_wait_.pop_front();
    urllc_slot.urllc_users++;
    urllc_slot.urllc_packets.push_back(a.packet);
    // Earliest boundary the packet could have ridden.
    std::int64_t eligible = (a.arrive_at + num_.slot_ps - 1) / num_.slot_ps;
    admitted.push_back({a.packet, a.cls, n, n, n - eligible});
  }

  SlotRecord& grant_slot = record(n + kNormalGrantLagSlots);
  while (!normal_wait_.empty() && normal_wait_.front().arrive_at <= t &&
         grant_slot.normal_users < normal_seats_) {
    TrafficArrival a = normal_wait_.front();
    normal_wait_.pop_front();
    grant_slot.normal_users++;
    grant_slot.normal_packets.push_back(a.packet);
    std::int64_t eligible = (a.arrive_at + num_.slot_ps - 1) / num_.slot_ps;
    admitted.push_back(
        {a.packet, a.cls, n + kNormalGrantLagSlots, n, n - eligible});
  }

  record(n).finalized = true;
  return admitted;
}

std::int64_t RanScheduler::admit_arrival(const TrafficArrival& a) {
  enqueue(a);
  for (;;) {
    for (const Admission& adm : on_boundary(last_boundary_ + 1))
      if (adm.packet == a.packet && adm.cls == a.cls) return adm.slot;
  }
}

RanScheduler::Occupancy RanScheduler::slot_occupancy(std::int64_t slot) const {
  auto it = slots_.find(slot);
  require(it != slots_.end() && it->second.finalized,
          "slot_occupancy: slot not finalized");
  const SlotRecord& r = it->second;
  return {kPrbsPerUser * (r.urllc_users + r.normal_users), r.urllc_users,
          r.normal_users};
}

CtiReport RanScheduler::cti_lookahead(std::int64_t target_slot) const {
  require(last_boundary_ >= target_slot - kNormalGrantLagSlots,
          "cti_lookahead: normal grants for the target not yet decided");
  int normal_users = 0;
  if (auto it = slots_.find(target_slot); it != slots_.end())
    normal_users = it->second.normal_users;
  return CtiReport{target_slot, ru_, kPrbsPerUser * normal_users,
                   cgs_.reserved_prbs};
}

const SlotRecord* RanScheduler::slot_record(std::int64_t slot) const {
  auto it = slots_.find(slot);
  return it == slots_.end() ? nullptr : &it->second;
}

SlotRecord RanScheduler::take_slot(std::int64_t slot) {
  auto it = slots_.find(slot);
  require(it != slots_.end() && it->second.finalized,
          "take_slot: slot not finalized");
  SlotRecord r = std::move(it->second);
  slots_.erase(it);
  return r;
}

LoadCalibration calibrate_load(double load_pct, int n_rus, double capacity_bps,
                               const Split72Params& p, double urllc_share) {
  if (load_pct <= 0.0 || n_rus < 1 || capacity_bps <= 0.0)
    throw std::invalid_argument("calibrate_load: bad target");
  if (urllc_share < 0.0 || urllc_share > 1.0)
    throw std::invalid_argument("calibrate_load: urllc share outside [0, 1]");
  LoadCalibration c;
  c.idle_floor_bps = split72_rate_bps(p, 0);
  c.per_ru_target_bps = load_pct / 100.0 * capacity_bps / n_rus;
  c.wire_bits_per_user_slot =
      split72_slope_bps_per_prb(p) * kPrbsPerUser * p.slot_time_s;
  if (c.per_ru_target_bps < c.idle_floor_bps)
    throw std::invalid_argument(
        "calibrate_load: target below the idle control-traffic floor");
  c.lambda_total_per_s =
      (c.per_ru_target_bps - c.idle_floor_bps) / c.wire_bits_per_user_slot;
  c.lambda_urllc_per_s = urllc_share * c.lambda_total_per_s;
  c.lambda_normal_per_s = c.lambda_total_per_s - c.lambda_urllc_per_s;
  return c;
}

}  // namespace vpon
