// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cefkit/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cefkit/error.hpp"
#include "cefkit/link_budget.hpp"
#include "cefkit/parallel.hpp"

namespace cefkit {

double p_los(double distance_m, const LosModel& model) {
  if (distance_m <= model.d1_m) return 1.0;
  const double e = std::exp(-distance_m / model.d2_m);
  const double v = (model.d1_m / distance_m) * (1.0 - e) + e;
  return v * v;
}

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

bool inside_hexagon(Point p, Point centre, double radius_m) {
  const double x = std::abs(p.x - centre.x);
  const double y = std::abs(p.y - centre.y);
  const double eps = 1e-12 * radius_m;
  return x <= 0.5 * kSqrt3 * radius_m + eps && y <= radius_m - x / kSqrt3 + eps;
}

CellLayout hex_layout(double area_m2, double radius_m) {
  if (!(area_m2 > 0.0)) throw InvalidArgument("network area must be > 0");
  if (!(radius_m > 0.0)) throw InvalidArgument("cell radius must be > 0");

  CellLayout layout;
  layout.radius_m = radius_m;
  layout.side_m = std::sqrt(area_m2);
  const double half = 0.5 * layout.side_m;
  if (radius_m > half) {
    layout.bs_positions.push_back({0.0, 0.0});
    return layout;
  }

  const double dx = kSqrt3 * radius_m;
  const double dy = 1.5 * radius_m;
  const auto rows = static_cast<long>(std::floor(half / dy));
  const auto cols = static_cast<long>(std::floor(half / dx)) + 1;
  const double eps = 1e-9 * layout.side_m;
  for (long j = -rows; j <= rows; ++j) {
    const double offset = (j % 2 != 0) ? 0.5 : 0.0;
    for (long i = -cols - 1; i <= cols; ++i) {
      const Point p{(static_cast<double>(i) + offset) * dx, static_cast<double>(j) * dy};
      if (std::abs(p.x) <= half + eps && std::abs(p.y) <= half + eps) {
        layout.bs_positions.push_back(p);
      }
    }
  }
  return layout;
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t cell, std::uint64_t drop)
    : engine_(splitmix64(splitmix64(splitmix64(seed) ^ cell) ^ (drop * 0xd1b54a32d192ed03ULL))) {}

double StreamRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Point StreamRng::in_hexagon(Point centre, double radius_m) {
  const double half_width = 0.5 * kSqrt3 * radius_m;
  for (;;) {
    const Point p{(2.0 * uniform() - 1.0) * half_width, (2.0 * uniform() - 1.0) * radius_m};
    if (inside_hexagon(p, {0.0, 0.0}, radius_m)) return {centre.x + p.x, centre.y + p.y};
  }
}

std::vector<std::vector<Point>> drop_ues(const CellLayout& layout, int n_per_cell,
                                         std::uint64_t seed, std::uint64_t drop) {
  if (n_per_cell < 1) throw InvalidArgument("UEs per cell must be >= 1");
  std::vector<std::vector<Point>> ues(layout.size());
  for (std::size_t c = 0; c < layout.size(); ++c) {
    StreamRng rng(seed, c, drop);
    ues[c].reserve(static_cast<std::size_t>(n_per_cell));
    for (int k = 0; k < n_per_cell; ++k) {
      ues[c].push_back(rng.in_hexagon(layout.bs_positions[c], layout.radius_m));
    }
  }
  return ues;
}

double power_control_eirp_dbm(double radius_m, const BandProfile& band, double target_snr_db,
                              double rx_gain_dbi, double noise_figure_db, double ple,
                              double temperature_k, double speed_of_light) {
  if (!(radius_m >= 1.0)) throw InvalidArgument("cell radius must be >= 1 m");
  const double noise = noise_power_dbm(NoiseSpec{band.bandwidth_hz, noise_figure_db, temperature_k});
  const double pl =
      path_loss_ci_db({band.carrier_frequency_hz, radius_m, ple, 1.0}, speed_of_light);
  return target_snr_db + noise + pl - rx_gain_dbi;
}

double sinr_db(double signal_w, double noise_w, std::span<const double> interference_w) {
  if (!(signal_w > 0.0) || !(noise_w > 0.0)) {
    throw InvalidArgument("signal and noise power must be > 0");
  }
  double total = noise_w;
  for (double i : interference_w) {
    if (i < 0.0) throw InvalidArgument("interference power must be >= 0");
    total += i;
  }
  return linear_to_db(signal_w / total);
}

NetworkScenario default_network_scenario() {
  const LinkScenario link = preset_scenario("subthz-140");
  NetworkScenario s;
  s.band = link.band;
  s.bs = link.bs;
  s.ue = link.ue;
  s.noise_figure_db = link.noise_figure_db;
  s.ple_los = link.ple_los;
  s.ple_nlos = link.ple_nlos;
  return s;
}

void validate(const NetworkScenario& s) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidArgument(what);
  };
  require(s.area_m2 > 0.0, "network.area must be > 0");
  require(s.cell_radius_m >= 1.0, "network.cell_radius must be >= 1 m");
  require(s.arrays_per_bs >= 1, "network.arrays_per_bs must be >= 1");
  require(s.ues_per_cell >= 1, "network.ues_per_cell must be >= 1");
  require(s.drops >= 1, "network.drops must be >= 1");
  require(s.los.d1_m > 0.0 && s.los.d2_m > 0.0, "LoS model distances must be > 0");
  require(s.sidelobe_discrimination_db >= 0.0, "side-lobe discrimination must be >= 0 dB");
  LinkScenario link;
  link.band = s.band;
  link.bs = s.bs;
  link.ue = s.ue;
  link.noise_figure_db = s.noise_figure_db;
  link.temperature_k = s.temperature_k;
  link.ple_los = s.ple_los;
  link.ple_nlos = s.ple_nlos;
  link.speed_of_light = s.speed_of_light;
  validate(link);
}

namespace {

struct CellDrop {
  double throughput_bps = 0.0;
  double power_w = 0.0;
  double sinr_db_sum = 0.0;
  std::size_t los_count = 0;
  std::vector<double> sinr_db;
  std::vector<UeSample> samples;
};

struct Constants {
  double eirp_w = 0.0;
  double ue_gain = 0.0;
  double fspl_1m = 0.0;
  double noise_w = 0.0;
  double sidelobe = 1.0;
  double main_lobe_probability = 1.0;
  double array_power_w = 0.0;  // per active array, cooled
  double ue_power_w = 0.0;
  double ue_draw_per_signal_w = 0.0;  // receive-section path draw per watt received, cooled
};

double distance(Point a, Point b, const CellLayout& layout, bool wrap) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  if (wrap) {
    dx -= layout.side_m * std::round(dx / layout.side_m);
    dy -= layout.side_m * std::round(dy / layout.side_m);
  }
  return std::sqrt(dx * dx + dy * dy);
}

// Linear channel gain of the CI model, distances clamped to the 1 m reference.
double path_gain(double d, double ple, double fspl_1m) {
  d = std::max(d, 1.0);
  return std::exp(-ple * std::log(d)) / fspl_1m;
}

CellDrop run_cell(const NetworkScenario& s, const CellLayout& layout, const Constants& k,
                  std::size_t cell, std::size_t drop) {
  StreamRng rng(s.seed, cell, drop);
  const Point bs = layout.bs_positions[cell];
  const auto n = static_cast<std::size_t>(s.ues_per_cell);

  std::vector<Point> ues(n);
  for (auto& u : ues) u = rng.in_hexagon(bs, layout.radius_m);

  // Round-robin over the arrays in order of bearing from the BS.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> bearing(n);
  for (std::size_t i = 0; i < n; ++i) bearing[i] = std::atan2(ues[i].y - bs.y, ues[i].x - bs.x);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return bearing[a] < bearing[b]; });
  const auto arrays = static_cast<std::size_t>(s.arrays_per_bs);
  std::vector<int> array_of(n);
  std::vector<int> load(arrays, 0);
  for (std::size_t r = 0; r < n; ++r) {
    array_of[order[r]] = static_cast<int>(r % arrays);
    ++load[r % arrays];
  }
  const auto active = static_cast<double>(std::min(n, arrays));

  CellDrop out;
  out.power_w = active * k.array_power_w + static_cast<double>(n) * k.ue_power_w;
  out.sinr_db.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    const Point u = ues[i];
    const double d = distance(u, bs, layout, false);
    const bool los = rng.uniform() < p_los(d, s.los);
    const double signal =
        k.eirp_w * k.ue_gain * path_gain(d, los ? s.ple_los : s.ple_nlos, k.fspl_1m);

    double interference = 0.0;
    if (s.interference) {
      for (std::size_t j = 0; j < layout.size(); ++j) {
        if (j == cell) continue;
        const double dj = distance(u, layout.bs_positions[j], layout, s.wrap_around);
        const bool los_j = rng.uniform() < p_los(dj, s.los);
        const bool main_lobe = rng.uniform() < k.main_lobe_probability;
        interference += k.eirp_w * k.ue_gain *
                        path_gain(dj, los_j ? s.ple_los : s.ple_nlos, k.fspl_1m) *
                        (main_lobe ? 1.0 : k.sidelobe);
      }
    }

    const double sinr_lin = signal / (k.noise_w + interference);
    const double sinr = linear_to_db(sinr_lin);
    const int share = load[static_cast<std::size_t>(array_of[i])];
    const double rate = (s.band.bandwidth_hz / share) * std::log2(1.0 + sinr_lin);

    out.power_w += signal * k.ue_draw_per_signal_w;
    out.throughput_bps += rate;
    out.sinr_db_sum += sinr;
    out.sinr_db.push_back(sinr);
    if (los) ++out.los_count;
    if (s.keep_samples) {
      out.samples.push_back(
          {drop, cell, d, los, linear_to_db(signal / k.noise_w), sinr, rate, share});
    }
  }
  return out;
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

NetworkReport simulate_network(const NetworkScenario& s) {
  validate(s);
  const CellLayout layout = hex_layout(s.area_m2, s.cell_radius_m);

  NetworkReport report;
  report.radius_m = s.cell_radius_m;
  report.cells = layout.size();

  LinkScenario link;
  link.band = s.band;
  link.bs = s.bs;
  link.ue = s.ue;
  link.speed_of_light = s.speed_of_light;
  const double bs_gain = terminal_gain_dbi(s.bs, link);
  const double ue_gain = terminal_gain_dbi(s.ue, link);

  report.eirp_dbm =
      power_control_eirp_dbm(s.cell_radius_m, s.band, s.target_edge_snr_db, ue_gain,
                             s.noise_figure_db, s.ple_los, s.temperature_k, s.speed_of_light);
  report.eirp_feasible = report.eirp_dbm <= s.eirp_ceiling_dbm;

  Constants k;
  k.eirp_w = dbm_to_watts(report.eirp_dbm);
  k.ue_gain = db_to_linear(ue_gain);
  k.fspl_1m = db_to_linear(fspl_1m_db(s.band.carrier_frequency_hz, s.speed_of_light));
  k.noise_w = dbm_to_watts(
      noise_power_dbm(NoiseSpec{s.band.bandwidth_hz, s.noise_figure_db, s.temperature_k}));
  k.sidelobe = db_to_linear(-s.sidelobe_discrimination_db);
  k.main_lobe_probability = 1.0 / s.arrays_per_bs;

  const Cascade tx = transmit_section(s.band, s.bs, report.eirp_dbm - bs_gain);
  k.array_power_w = (consumed_power(tx) + terminal_overhead_w(s.band, s.bs)) *
                    (1.0 + s.bs.cooling_overhead);
  k.ue_power_w = (lna_bank(s.band, s.ue).non_path_power() + terminal_overhead_w(s.band, s.ue)) *
                 (1.0 + s.ue.cooling_overhead);
  const Cascade rx({lna_bank(s.band, s.ue), make_passive(db_to_linear(s.band.phase_shifter_loss_db)),
                    make_passive(db_to_linear(s.band.mixer_loss_db))},
                   1.0);
  k.ue_draw_per_signal_w =
      (sink_signal_power(rx) * cascade_waste_factor(rx) - 1.0) * (1.0 + s.ue.cooling_overhead);

  const std::size_t cells = layout.size();
  const auto drops = static_cast<std::size_t>(s.drops);
  std::vector<CellDrop> units(cells * drops);
  parallel_for(units.size(), s.threads, [&](std::size_t u) {
    units[u] = run_cell(s, layout, k, u % cells, u / cells);
  });

  std::vector<double> drop_cef(drops);
  double throughput_sum = 0.0;
  double power_sum = 0.0;
  double sinr_sum = 0.0;
  std::size_t los_count = 0;
  std::vector<double> all_sinr;
  all_sinr.reserve(cells * drops * static_cast<std::size_t>(s.ues_per_cell));
  for (std::size_t d = 0; d < drops; ++d) {
    double thr = 0.0;
    double pow = 0.0;
    for (std::size_t c = 0; c < cells; ++c) {
      CellDrop& unit = units[d * cells + c];
      thr += unit.throughput_bps;
      pow += unit.power_w;
      sinr_sum += unit.sinr_db_sum;
      los_count += unit.los_count;
      all_sinr.insert(all_sinr.end(), unit.sinr_db.begin(), unit.sinr_db.end());
      if (s.keep_samples) {
        report.samples.insert(report.samples.end(), unit.samples.begin(), unit.samples.end());
      }
    }
    drop_cef[d] = thr / pow;
    throughput_sum += thr;
    power_sum += pow;
  }

  const auto nd = static_cast<double>(drops);
  report.total_throughput_bps = throughput_sum / nd;
  report.total_power_w = power_sum / nd;
  report.network_cef_bpj = report.total_throughput_bps / report.total_power_w;

  if (drops > 1) {
    const double mean = std::accumulate(drop_cef.begin(), drop_cef.end(), 0.0) / nd;
    double ss = 0.0;
    for (double v : drop_cef) ss += (v - mean) * (v - mean);
    report.ci_halfwidth_bpj = 1.96 * std::sqrt(ss / (nd - 1.0)) / std::sqrt(nd);
  }

  const auto total_ues = static_cast<double>(all_sinr.size());
  report.los_fraction = static_cast<double>(los_count) / total_ues;
  std::sort(all_sinr.begin(), all_sinr.end());
  report.sinr.mean_db = sinr_sum / total_ues;
  report.sinr.min_db = all_sinr.front();
  report.sinr.p10_db = quantile(all_sinr, 0.1);
  report.sinr.median_db = quantile(all_sinr, 0.5);
  report.sinr.p90_db = quantile(all_sinr, 0.9);
  return report;
}

RadiusSweep sweep_radius(const NetworkScenario& scenario, std::span<const double> radii_m) {
  if (radii_m.empty()) throw InvalidArgument("radius sweep needs at least one radius");
  RadiusSweep sweep;
  for (double r : radii_m) {
    NetworkScenario s = scenario;
    s.cell_radius_m = r;
    sweep.reports.push_back(simulate_network(s));
  }
  for (std::size_t i = 1; i < sweep.reports.size(); ++i) {
    if (sweep.reports[i].network_cef_bpj > sweep.reports[sweep.argmax_index].network_cef_bpj) {
      sweep.argmax_index = i;
    }
  }
  sweep.argmax_radius_m = sweep.reports[sweep.argmax_index].radius_m;
  return sweep;
}

std::vector<double> default_radii() { return {20, 35, 50, 65, 80, 100, 150, 250, 500}; }

}  // namespace cefkit
