#include "vpon/pon_topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vpon {

std::string to_string(const NodeId& n) {
  switch (n.kind) {
    case NodeKind::RuOnu: return "ru-onu" + std::to_string(n.index);
    case NodeKind::MecOlt: return "mec-olt" + std::to_string(n.index);
    case NodeKind::MecOnu: return "mec-onu" + std::to_string(n.index);
    case NodeKind::CoOlt: return "co-olt";
  }
  return "?";
}

namespace {
SimTime km_to_ps(double km) {
  return static_cast<SimTime>(std::llround(km * 4'500'000.0));  // 4.5 us/km
}
}  // namespace

// Sites: 0..n_rus-1 per-RU, then MEC-1, MEC-2, CO.
Topology::Topology(const TopologySpec& spec) : n_rus_(spec.n_rus) {
  if (spec.n_rus < 1) throw std::invalid_argument("topology: need at least one RU");
  n_sites_ = n_rus_ + 3;
  const int mec1 = n_rus_, mec2 = n_rus_ + 1, co = n_rus_ + 2;

  std::vector<Link> links;
  for (int i = 0; i < n_rus_; ++i) links.push_back({i, mec1, spec.ru_mec_km});
  links.push_back({mec1, mec2, spec.mec_mec_km});
  links.push_back({mec1, co, spec.mec_co_km});
  links.push_back({mec2, co, spec.mec_co_km});
  for (const Link& l : links)
    if (l.distance_km <= 0.0)
      throw std::invalid_argument("topology: link distance must be > 0 km");

  // All-pairs shortest paths; the graph is tiny.
  constexpr SimTime inf = std::numeric_limits<SimTime>::max() / 4;
  site_delay_.assign(n_sites_, std::vector<SimTime>(n_sites_, inf));
  for (int i = 0; i < n_sites_; ++i) site_delay_[i][i] = 0;
  for (const Link& l : links) {
    SimTime d = km_to_ps(l.distance_km);
    site_delay_[l.site_a][l.site_b] = std::min(site_delay_[l.site_a][l.site_b], d);
    site_delay_[l.site_b][l.site_a] = std::min(site_delay_[l.site_b][l.site_a], d);
  }
  for (int k = 0; k < n_sites_; ++k)
    for (int i = 0; i < n_sites_; ++i)
      for (int j = 0; j < n_sites_; ++j)
        site_delay_[i][j] =
            std::min(site_delay_[i][j], site_delay_[i][k] + site_delay_[k][j]);
  for (int i = 0; i < n_sites_; ++i)
    for (int j = 0; j < n_sites_; ++j)
      if (site_delay_[i][j] >= inf)
        throw std::invalid_argument("topology: disconnected");

  slices_.push_back(VponSlice{0, co_olt(), "ch0"});
  for (int i = 0; i < n_rus_; ++i)
    onus_.push_back({ru_onu(i), 0, 0, 0});
  onus_.push_back({mec_onu(1), 0, 0, 0});
  onus_.push_back({mec_onu(2), 0, 0, 0});
}

int Topology::site_of(NodeId n) const {
  switch (n.kind) {
    case NodeKind::RuOnu:
      if (n.index < 0 || n.index >= n_rus_)
        throw std::out_of_range("topology: RU index");
      return n.index;
    case NodeKind::MecOlt:
    case NodeKind::MecOnu:
      if (n.index != 1 && n.index != 2)
        throw std::out_of_range("topology: MEC index");
      return n_rus_ + (n.index - 1);
    case NodeKind::CoOlt:
      return n_rus_ + 2;
  }
  throw std::out_of_range("topology: bad node");
}

int Topology::onu_slot(NodeId onu) const {
  for (std::size_t i = 0; i < onus_.size(); ++i)
    if (onus_[i].onu == onu) return static_cast<int>(i);
  throw std::invalid_argument("topology: not an ONU");
}

SimTime Topology::propagation_delay(NodeId a, NodeId b) const {
  return site_delay_[site_of(a)][site_of(b)];
}

int Topology::create_slice(NodeId olt, std::string wavelength) {
  if (olt.kind != NodeKind::MecOlt && olt.kind != NodeKind::CoOlt)
    throw std::invalid_argument("slice: OLT must be a MEC or CO OLT");
  int id = static_cast<int>(slices_.size());
  slices_.push_back(VponSlice{id, olt, std::move(wavelength)});
  return id;
}

std::vector<ControlMessage> Topology::reconfigure_slice(int slice_id,
                                                        NodeId onu,
                                                        SimTime now) {
  if (slice_id <= 0 || slice_id >= static_cast<int>(slices_.size()))
    throw std::invalid_argument("reconfigure: unknown slice");
  Membership& m = onus_[onu_slot(onu)];
  if (!(m.slice_id == 0 && m.effective_at <= now))
    throw std::logic_error("reconfigure: ONU not settled in the control slice");

  std::vector<ControlMessage> transcript;
  // Downlink PLOAM from the CO announces the new slice to the ONU.
  SimTime ploam_arrives = now + propagation_delay(co_olt(), onu);
  transcript.push_back({ControlKind::SliceAdd, co_olt(), onu, slice_id, now,
                        ploam_arrives});
  // Wavelength retune, then ack to the new slice OLT.
  SimTime retuned = ploam_arrives + retune_time();
  NodeId olt = slices_[slice_id].olt;
  SimTime ack_arrives = retuned + propagation_delay(onu, olt);
  transcript.push_back(
      {ControlKind::TuneAck, onu, olt, slice_id, retuned, ack_arrives});

  m.left_prev_at = now;
  m.slice_id = slice_id;
  m.effective_at = ack_arrives;
  return transcript;
}

std::vector<ControlMessage> Topology::release_to_control(NodeId onu,
                                                         SimTime now) {
  Membership& m = onus_[onu_slot(onu)];
  if (m.slice_id == 0) throw std::logic_error("release: already in the control slice");
  if (m.effective_at > now) throw std::logic_error("release: ONU still retuning");

  std::vector<ControlMessage> transcript;
  SimTime ploam_arrives = now + propagation_delay(co_olt(), onu);
  transcript.push_back({ControlKind::SliceRemove, co_olt(), onu, m.slice_id,
                        now, ploam_arrives});
  SimTime retuned = ploam_arrives + retune_time();
  SimTime ack_arrives = retuned + propagation_delay(onu, co_olt());
  transcript.push_back(
      {ControlKind::TuneAck, onu, co_olt(), 0, retuned, ack_arrives});

  m.left_prev_at = now;
  m.slice_id = 0;
  m.effective_at = ack_arrives;
  return transcript;
}

bool Topology::in_slice(int slice_id, NodeId onu, SimTime at) const {
  const Membership& m = onus_[onu_slot(onu)];
  return m.slice_id == slice_id && m.effective_at <= at;
}

std::vector<NodeId> Topology::members(int slice_id, SimTime at) const {
  std::vector<NodeId> out;
  for (const Membership& m : onus_)
    if (m.slice_id == slice_id && m.effective_at <= at) out.push_back(m.onu);
  return out;
}

int Topology::slice_of(NodeId onu, SimTime at) const {
  const Membership& m = onus_[onu_slot(onu)];
  if (m.effective_at > at) return -1;
  return m.slice_id;
}

}  // namespace vpon
