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


#ifndef CEFKIT_NETSIM_HPP
#define CEFKIT_NETSIM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cefkit/transceiver.hpp"

namespace cefkit {

/// Squared LoS probability model constants.
struct LosModel {
  double d1_m = 22.0;
  double d2_m = 113.4;

  bool operator==(const LosModel&) const = default;
};

/// (min(d1/d, 1) (1 - e^(-d/d2)) + e^(-d/d2))^2; 1 for d <= d1.
double p_los(double distance_m, const LosModel& model = {});

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Pointy-top hexagons of circumradius `radius_m` centred on lattice points
/// inside a square of the given area centred at the origin.
struct CellLayout {
  double radius_m = 0.0;
  double side_m = 0.0;
  std::vector<Point> bs_positions;

  std::size_t size() const noexcept { return bs_positions.size(); }
};

/// Throws InvalidArgument unless area and radius are positive. A radius
/// larger than half the square's side gives a single cell at the origin.
CellLayout hex_layout(double area_m2, double radius_m);

/// Point-in-hexagon test (pointy-top, circumradius r, boundary included).
bool inside_hexagon(Point p, Point centre, double radius_m);

/// Portable per-stream generator: mt19937_64 seeded by hashing
/// (seed, cell, drop), with 53-bit uniform doubles.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t cell, std::uint64_t drop);
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform point inside the hexagon of circumradius r centred at `centre`.
  Point in_hexagon(Point centre, double radius_m);

 private:
  std::mt19937_64 engine_;
};

/// `n_per_cell` uniform UE positions per cell for one drop, indexed
/// [cell][ue]. Each cell draws from its own stream, so changing the number of
/// cells does not reshuffle the others.
std::vector<std::vector<Point>> drop_ues(const CellLayout& layout, int n_per_cell,
                                         std::uint64_t seed, std::uint64_t drop = 0);

/// EIRP that puts a receiver at the cell edge at `target_snr_db` over the
/// full band: target + noise(B, NF) + PL_CI(f, r, ple) - G_rx.
double power_control_eirp_dbm(double radius_m, const BandProfile& band, double target_snr_db,
                              double rx_gain_dbi, double noise_figure_db = 10.0,
                              double ple = 2.0, double temperature_k = kReferenceTemperature,
                              double speed_of_light = kSpeedOfLight);

/// S / (N + sum I) in dB, all inputs in watts.
double sinr_db(double signal_w, double noise_w, std::span<const double> interference_w);

struct NetworkScenario {
  double area_m2 = 1e6;
  double cell_radius_m = 65.0;
  int arrays_per_bs = 6;
  int ues_per_cell = 15;
  BandProfile band;
  TerminalProfile bs;  // one sector array
  TerminalProfile ue;
  double noise_figure_db = 10.0;
  double temperature_k = kReferenceTemperature;
  double ple_los = 2.0;
  double ple_nlos = 3.2;
  double speed_of_light = kSpeedOfLight;
  double target_edge_snr_db = 20.0;
  LosModel los;
  std::uint64_t seed = 1;
  int drops = 50;
  bool interference = true;
  bool wrap_around = false;
  double sidelobe_discrimination_db = 20.0;
  double eirp_ceiling_dbm = 75.0;
  unsigned threads = 0;
  /// Keep every UE sample in the report (tests and diagnostics).
  bool keep_samples = false;

  bool operator==(const NetworkScenario&) const = default;
};

/// 140 GHz preset band and terminals.
NetworkScenario default_network_scenario();

void validate(const NetworkScenario& scenario);

struct UeSample {
  std::size_t drop = 0;
  std::size_t cell = 0;
  double distance_m = 0.0;
  bool los = false;
  double snr_db = 0.0;
  double sinr_db = 0.0;
  double rate_bps = 0.0;
  int array_load = 0;  // UEs sharing this UE's array
};

struct SinrSummary {
  double mean_db = 0.0;
  double min_db = 0.0;
  double p10_db = 0.0;
  double median_db = 0.0;
  double p90_db = 0.0;
};

struct NetworkReport {
  double radius_m = 0.0;
  std::size_t cells = 0;
  double eirp_dbm = 0.0;
  bool eirp_feasible = true;
  /// Per-drop averages.
  double total_throughput_bps = 0.0;
  double total_power_w = 0.0;
  /// total_throughput_bps / total_power_w
  double network_cef_bpj = 0.0;
  /// 95% normal half-width of the per-drop CEF mean.
  double ci_halfwidth_bpj = 0.0;
  SinrSummary sinr;
  double los_fraction = 0.0;
  std::vector<UeSample> samples;
};

NetworkReport simulate_network(const NetworkScenario& scenario);

struct RadiusSweep {
  std::vector<NetworkReport> reports;
  std::size_t argmax_index = 0;
  double argmax_radius_m = 0.0;
};

/// simulate_network at each radius (other fields from `scenario`).
RadiusSweep sweep_radius(const NetworkScenario& scenario, std::span<const double> radii_m);

/// Radii of the reference cell-size study.
std::vector<double> default_radii();

}  // namespace cefkit

#endif  // CEFKIT_NETSIM_HPP
