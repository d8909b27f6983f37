#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vpon/ran_traffic.hpp"
#include "vpon/sim_core.hpp"

namespace vpon {

// Streaming latency statistics per (traffic class, stage pair): exact count,
// mean and max, percentiles from a 1 us fixed-resolution histogram. Samples
// from packets that arrived during the warm-up window are dropped; duplicate
// (packet, stage-pair) records and non-monotone timestamps are hard errors.

enum class StagePair : std::uint8_t { UeDu = 0, UeApp = 1, RuDu = 2, DuApp = 3 };

inline constexpr int kStagePairCount = 4;
inline constexpr int kTrafficClassCount = 2;

std::string to_string(StagePair p);
std::string to_string(TrafficClass c);

struct StatSummary {
  std::uint64_t count = 0;
  double mean_us = 0.0;
  double max_us = 0.0;
  double p50_us = 0.0;
  double p99_us = 0.0;
};

struct ScenarioTags {
  std::string scenario_id = "custom";
  double load_pct = 0.0;
  double slot_ms = 0.5;
  double cgs_pct = 10.0;
  double dl_fraction = 1.0;
  std::string policy = "enhanced-codba";
  std::uint64_t seed = 1;
};

class MetricsRecorder {
 public:
  explicit MetricsRecorder(SimTime warmup);

  // Every packet is registered once, before any record() for it.
  void register_packet(std::uint32_t packet, TrafficClass cls,
                       SimTime ue_arrival);

  // Latency = to - from; rejects duplicates, negative spans, and unknown
  // packets. Samples from warm-up packets are silently dropped.
  void record(std::uint32_t packet, StagePair pair, SimTime from, SimTime to);

  std::uint64_t registered() const { return static_cast<std::uint64_t>(packets_.size()); }

  std::optional<StatSummary> summarize(TrafficClass cls, StagePair pair) const;

  // One row per non-empty (class, stage-pair) series, fixed order, fixed
  // formatting: byte-identical across reruns of the same scenario.
  std::string to_csv(const ScenarioTags& tags) const;
  static std::string csv_header();

 private:
  struct Series {
    std::uint64_t count = 0;
    unsigned __int128 sum_ps = 0;
    SimTime max_ps = 0;
    std::vector<std::uint32_t> bins_us;  // grown lazily, clamped at the cap
  };
  struct PacketInfo {
    SimTime ue_arrival;
    TrafficClass cls;
    std::uint8_t recorded_mask = 0;
  };

  Series& series(TrafficClass cls, StagePair pair) {
    return series_[static_cast<int>(cls) * kStagePairCount +
                   static_cast<int>(pair)];
  }
  const Series& series(TrafficClass cls, StagePair pair) const {
    return series_[static_cast<int>(cls) * kStagePairCount +
                   static_cast<int>(pair)];
  }

  SimTime warmup_;
  std::vector<PacketInfo> packets_;  // indexed by packet id
  std::array<Series, kTrafficClassCount * kStagePairCount> series_;
};

}  // namespace vpon
