#pragma once

#include <vector>

namespace vpon {

// Pure calculators for the split-7.2 fronthaul rate, the cell throughput
// bound, the DU per-slot payload, and PON traffic intensity. No hidden state;
// all rates in double precision, quantization to bytes happens downstream.

struct Split72Params {
  int n_ant = 4;            // antenna streams, I+Q covered by the leading 2
  int n_re_per_prb = 156;   // resource elements per PRB per slot
  int n_res_bits = 8;       // IQ sample resolution, bits per component
  struct {
    int n_reg = 1;
    int n_re = 156;
    int n_res = 8;
  } pucch;
  struct {
    int n_bins = 839;
    int n_res = 10;
    double period_s = 10e-3;
  } prach;
  struct {
    int n_re = 12;          // subcarriers per PRB sounded
    int n_res = 8;
    double period_s = 1e-3;
  } srs;
  double slot_time_s = 0.5e-3;
  int max_prbs = 270;
};

// Defaults for numerology 1 (0.5 ms slots, 270 PRBs) or 2 (0.25 ms, 135).
Split72Params split72_defaults(int mu);

// Uplink fronthaul bit rate when data_prbs PRBs carry user data. Affine in
// data_prbs; positive at zero occupancy (PUCCH + PRACH + SRS floor).
double split72_rate_bps(const Split72Params& p, int data_prbs);

// Rate increment contributed by one additional data PRB.
double split72_slope_bps_per_prb(const Split72Params& p);

struct CellThroughputParams {
  int j_carriers = 1;
  int layers = 4;
  int q_m = 8;              // 256-QAM
  double scaling = 1.0;
  double r_max = 948.0 / 1024.0;
  int max_prbs = 270;
  double symbol_time_s = 1e-3 / 28.0;  // 1e-3 / (14 * 2^mu)
  double overhead = 0.1;
};

CellThroughputParams cell_defaults(int mu);

// Peak cell throughput in Mbps.
double cell_throughput_mbps(const CellThroughputParams& p);

struct DuPayloadParams {
  double r_cell_mbps = 0.0;
  int max_prbs = 270;
  int prbs_per_user = 5;
  double slot_time_s = 0.5e-3;
};

DuPayloadParams du_defaults(int mu);

// DU-processed payload per slot for the given active-user count, in megabits.
double du_payload_per_slot_mb(const DuPayloadParams& p, int active_users);

// 100 * sum(ru_rates) / capacity.
double traffic_intensity_pct(const std::vector<double>& ru_rates_bps,
                             double capacity_bps);

}  // namespace vpon
