#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpon/dba.hpp"
#include "vpon/metrics.hpp"
#include "vpon/pon_topology.hpp"

namespace vpon {

// Scenario configuration: key-value sections [ran], [pon], [sweep] with
// defaults matching the reference setup (numerology 1, 270 PRBs, 0.5 ms
// slots, 50 Gbps uplink, 20% URLLC share). Sweeps expand the cross product
// policies x fractions x loads x seeds in declared order.

struct Scenario {
  std::string id = "custom";
  int mu = 1;
  double cgs_fraction = 0.10;
  double urllc_share = 0.20;
  Policy policy = Policy::EnhancedCodba;
  int n_rus = 16;
  double dl_fraction = 1.0;
  double load_pct = 50.0;
  double duration_s = 2.0;
  double warmup_ms = 50.0;
  std::uint64_t seed = 1;
  double ru_mec_km = 2.0;
  double mec_mec_km = 20.0;
  double mec_co_km = 50.0;
  double capacity_bps = 50e9;
};

struct SweepSpec {
  std::string id;
  std::vector<Scenario> points;
};

// Parses a scenario file body; [ran] and [pon] must be present (possibly
// empty). Unknown sections, unknown keys, and out-of-domain values raise
// std::invalid_argument naming the offender. A slot_time_ms key is accepted
// only as a cross-check against the numerology's closed form.
Scenario parse_scenario(const std::string& text);

// Expands the [sweep] section (or a single default point) into runs.
SweepSpec sweep_from_text(const std::string& text, const std::string& id);

std::vector<std::string> preset_names();
SweepSpec preset_sweep(const std::string& name);

ScenarioTags tags_for(const Scenario& sc);
std::string point_dir_name(const Scenario& sc);

}  // namespace vpon
