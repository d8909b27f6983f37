#include "vpon/metrics.hpp"

#include <cinttypes>
#include <cstdio>

namespace vpon {

namespace {
constexpr std::size_t kMaxBins = 4u << 20;  // 1 us bins up to ~4.2 s
}

std::string to_string(StagePair p) {
  switch (p) {
    case StagePair::UeDu: return "UE_DU";
    case StagePair::UeApp: return "UE_APP";
    case StagePair::RuDu: return "RU_DU";
    case StagePair::DuApp: return "DU_APP";
  }
  return "?";
}

std::string to_string(TrafficClass c) {
  return c == TrafficClass::Urllc ? "urllc" : "normal";
}

MetricsRecorder::MetricsRecorder(SimTime warmup) : warmup_(warmup) {}

void MetricsRecorder::register_packet(std::uint32_t packet, TrafficClass cls,
                                      SimTime ue_arrival) {
  if (packet >= packets_.size()) packets_.resize(packet + 1);
  packets_[packet] = PacketInfo{ue_arrival, cls, 0};
}

void MetricsRecorder::record(std::uint32_t packet, StagePair pair,
                             SimTime from, SimTime to) {
  require(packet < packets_.size(), "metrics: unregistered packet");
  require(to >= from, "metrics: stage timestamps must be non-decreasing");
  PacketInfo& info = packets_[packet];
  const std::uint8_t bit = static_cast<std::uint8_t>(1u << static_cast<int>(pair));
  require((info.recorded_mask & bit) == 0,
          "metrics: duplicate sample for this packet and stage pair");
  info.recorded_mask |= bit;
  if (info.ue_arrival < warmup_) return;

  Series& s = series(info.cls, pair);
  const SimTime lat = to - from;
  s.count++;
  s.sum_ps += static_cast<unsigned __int128>(lat);
  if (lat > s.max_ps) s.max_ps = lat;
  std::size_t bin = static_cast<std::size_t>(lat / kMicrosecond);
  if (bin >= kMaxBins) bin = kMaxBins - 1;
  if (bin >= s.bins_us.size()) s.bins_us.resize(bin + 1, 0);
  s.bins_us[bin]++;
}

namespace {
double percentile_us(const std::vector<std::uint32_t>& bins,
                     std::uint64_t count, double q) {
  // Lower edge of the first bin whose cumulative count reaches q * count.
  const std::uint64_t target =
      static_cast<std::uint64_t>(q * static_cast<double>(count));
  std::uint64_t cum = 0;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    cum += bins[i];
    if (cum >= target && cum > 0) return static_cast<double>(i);
  }
  return bins.empty() ? 0.0 : static_cast<double>(bins.size() - 1);
}
}  // namespace

std::optional<StatSummary> MetricsRecorder::summarize(TrafficClass cls,
                                                      StagePair pair) const {
  const Series& s = series(cls, pair);
  if (s.count == 0) return std::nullopt;
  StatSummary out;
  out.count = s.count;
  out.mean_us = static_cast<double>(s.sum_ps) /
                static_cast<double>(s.count) / 1e6;
  out.max_us = static_cast<double>(s.max_ps) / 1e6;
  out.p50_us = percentile_us(s.bins_us, s.count, 0.50);
  out.p99_us = percentile_us(s.bins_us, s.count, 0.99);
  return out;
}

std::string MetricsRecorder::csv_header() {
  return "scenario_id,load_pct,slot_ms,cgs_pct,dl_fraction,policy,class,"
         "stage_pair,count,mean_us,max_us,p50_us,p99_us,seed\n";
}

std::string MetricsRecorder::to_csv(const ScenarioTags& tags) const {
  std::string out = csv_header();
  char line[512];
  for (int c = 0; c < kTrafficClassCount; ++c) {
    for (int p = 0; p < kStagePairCount; ++p) {
      auto cls = static_cast<TrafficClass>(c);
      auto pair = static_cast<StagePair>(p);
      auto s = summarize(cls, pair);
      if (!s) continue;
      std::snprintf(line, sizeof line,
                    "%s,%g,%g,%g,%g,%s,%s,%s,%" PRIu64
                    ",%.3f,%.3f,%.3f,%.3f,%" PRIu64 "\n",
                    tags.scenario_id.c_str(), tags.load_pct, tags.slot_ms,
                    tags.cgs_pct, tags.dl_fraction, tags.policy.c_str(),
                    to_string(cls).c_str(), to_string(pair).c_str(), s->count,
                    s->mean_us, s->max_us, s->p50_us, s->p99_us, tags.seed);
      out += line;
    }
  }
  return out;
}

}  // namespace vpon
