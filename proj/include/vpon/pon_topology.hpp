#pragma once

#include <string>
#include <vector>

#include "vpon/sim_core.hpp"

namespace vpon {

// Mesh-PON node graph: per-RU ONUs behind an access span to MEC-1, OLT/ONU
// pairs at both MEC sites, an OLT at the central office, and splitter
// loopback paths between sites. Propagation is 4.5 us/km along shortest
// paths. vPON slices group ONUs under one OLT; membership changes follow a
// timed control-message transcript and take effect only when the tuning ack
// lands at the new OLT.

enum class NodeKind : std::uint8_t { RuOnu, MecOlt, MecOnu, CoOlt };

struct NodeId {
  NodeKind kind;
  int index = 0;
  bool operator==(const NodeId&) const = default;
};

std::string to_string(const NodeId& n);

struct Link {
  int site_a;
  int site_b;
  double distance_km;
};

enum class ControlKind : std::uint8_t { SliceAdd, SliceRemove, TuneAck };

struct ControlMessage {
  ControlKind kind;
  NodeId from;
  NodeId target;
  int slice_id;
  SimTime sent_at;
  SimTime delivered_at;
};

struct VponSlice {
  int id;
  NodeId olt;
  std::string wavelength;
  double uplink_bps = 50e9;
};

struct TopologySpec {
  int n_rus = 16;
  double ru_mec_km = 2.0;   // each RU site to MEC-1
  double mec_mec_km = 20.0; // MEC-1 to MEC-2 loopback path
  double mec_co_km = 50.0;  // each MEC to the central office
};

inline constexpr SimTime kPropPerKm = SimTime{4'500} * kNanosecond;

class Topology {
 public:
  explicit Topology(const TopologySpec& spec);

  int n_rus() const { return n_rus_; }
  NodeId ru_onu(int i) const { return {NodeKind::RuOnu, i}; }
  NodeId mec_olt(int i) const { return {NodeKind::MecOlt, i}; }  // i in {1,2}
  NodeId mec_onu(int i) const { return {NodeKind::MecOnu, i}; }
  NodeId co_olt() const { return {NodeKind::CoOlt, 0}; }

  // One-way delay along the shortest fiber path; symmetric.
  SimTime propagation_delay(NodeId a, NodeId b) const;

  // Slice 0 is the central-office control channel holding every ONU at start.
  int control_slice() const { return 0; }
  int create_slice(NodeId olt, std::string wavelength);

  // Moves an ONU from the control channel into `slice_id`. Returns the timed
  // transcript: PLOAM add from the CO, wavelength retune (35 us), tuning ack
  // to the new OLT. The ONU leaves its old slice at `now` and joins the new
  // one at ack delivery; in between it is unsliced and receives no grants.
  std::vector<ControlMessage> reconfigure_slice(int slice_id, NodeId onu,
                                                SimTime now);
  // Returns an ONU to the control channel with a symmetric transcript.
  std::vector<ControlMessage> release_to_control(NodeId onu, SimTime now);

  bool in_slice(int slice_id, NodeId onu, SimTime at) const;
  std::vector<NodeId> members(int slice_id, SimTime at) const;
  // The slice an ONU belongs to at `at`, or -1 while retuning.
  int slice_of(NodeId onu, SimTime at) const;

  const std::vector<VponSlice>& slices() const { return slices_; }
  SimTime retune_time() const { return SimTime{35} * kMicrosecond; }

 private:
  int site_of(NodeId n) const;
  int onu_slot(NodeId onu) const;

  int n_rus_;
  int n_sites_;
  std::vector<std::vector<SimTime>> site_delay_;
  std::vector<VponSlice> slices_;

  struct Membership {
    NodeId onu;
    int slice_id;          // target slice
    SimTime effective_at;  // joined the target at this instant
    SimTime left_prev_at;  // left the previous slice at this instant
  };
  std::vector<Membership> onus_;
};

}  // namespace vpon
