#include "vpon/rate_model.hpp"

#include <stdexcept>

namespace vpon {

namespace {
void check_mu(int mu) {
  if (mu != 1 && mu != 2) throw std::invalid_argument("numerology must be 1 or 2");
}
}  // namespace

Split72Params split72_defaults(int mu) {
  check_mu(mu);
  Split72Params p;
  p.slot_time_s = (mu == 1) ? 0.5e-3 : 0.25e-3;
  p.max_prbs = (mu == 1) ? 270 : 135;
  return p;
}

double split72_rate_bps(const Split72Params& p, int data_prbs) {
  if (data_prbs < 0 || data_prbs > p.max_prbs)
    throw std::out_of_range("split72_rate: data_prbs out of range");
  const double pusch = static_cast<double>(data_prbs) * p.n_re_per_prb *
                       p.n_res_bits / p.slot_time_s;
  const double pucch = static_cast<double>(p.pucch.n_reg) * p.pucch.n_re *
                       p.pucch.n_res / p.slot_time_s;
  const double prach =
      static_cast<double>(p.prach.n_bins) * p.prach.n_res / p.prach.period_s;
  const int srs_subcarriers = (p.max_prbs - p.pucch.n_reg) * p.srs.n_re;
  const double srs =
      static_cast<double>(srs_subcarriers) * p.srs.n_res / p.srs.period_s;
  return 2.0 * p.n_ant * (pusch + pucch + prach + srs);
}

double split72_slope_bps_per_prb(const Split72Params& p) {
  return 2.0 * p.n_ant * p.n_re_per_prb * p.n_res_bits / p.slot_time_s;
}

CellThroughputParams cell_defaults(int mu) {
  check_mu(mu);
  CellThroughputParams p;
  p.max_prbs = (mu == 1) ? 270 : 135;
  p.symbol_time_s = 1e-3 / (14.0 * (1 << mu));
  return p;
}

double cell_throughput_mbps(const CellThroughputParams& p) {
  double total = 0.0;
  for (int j = 0; j < p.j_carriers; ++j) {
    total += p.layers * p.q_m * p.scaling * p.r_max *
             (static_cast<double>(p.max_prbs) * 12.0 / p.symbol_time_s) *
             (1.0 - p.overhead);
  }
  return 1e-6 * total;
}

DuPayloadParams du_defaults(int mu) {
  check_mu(mu);
  DuPayloadParams p;
  p.r_cell_mbps = cell_throughput_mbps(cell_defaults(mu));
  p.max_prbs = (mu == 1) ? 270 : 135;
  p.slot_time_s = (mu == 1) ? 0.5e-3 : 0.25e-3;
  return p;
}

double du_payload_per_slot_mb(const DuPayloadParams& p, int active_users) {
  if (active_users < 0 || active_users * p.prbs_per_user > p.max_prbs)
    throw std::out_of_range("du_payload_per_slot: active_users out of range");
  return p.r_cell_mbps / p.max_prbs * p.prbs_per_user * active_users *
         p.slot_time_s;
}

double traffic_intensity_pct(const std::vector<double>& ru_rates_bps,
                             double capacity_bps) {
  if (capacity_bps <= 0.0)
    throw std::invalid_argument("traffic_intensity: capacity must be > 0");
  double sum = 0.0;
  for (double r : ru_rates_bps) sum += r;
  return 100.0 * sum / capacity_bps;
}

}  // namespace vpon
