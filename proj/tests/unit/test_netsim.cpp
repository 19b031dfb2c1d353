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


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "cefkit/error.hpp"
#include "cefkit/link_budget.hpp"
#include "cefkit/netsim.hpp"

namespace {

using namespace cefkit;

TEST(LosProbability, FrozenValues) {
  struct Case {
    double d;
    double p;
  };
  // Independent high-precision evaluation of the closed form.
  const Case cases[] = {
      {0.0, 1.0},
      {10.0, 1.0},
      {22.0, 1.0},
      {30.0, 0.87986954744775992914},
      {50.0, 0.64052776163574640834},
      {65.0, 0.50607004193468588537},
      {100.0, 0.29478144397227208793},
      {150.0, 0.13987286387981068855},
      {250.0, 0.035566248919103832426},
      {500.0, 0.0030946954387170849957},
      {1000.0, 0.00049038940561325541531},
  };
  for (const auto& c : cases) EXPECT_NEAR(p_los(c.d), c.p, 1e-12) << c.d;
}

TEST(LosProbability, MonotoneAndSaturated) {
  double prev = p_los(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double p = p_los(i * 1.0);
    EXPECT_LE(p, prev);
    if (i <= 22) EXPECT_EQ(p, 1.0);
    prev = p;
  }
  EXPECT_EQ(p_los(40.0, {50.0, 113.4}), 1.0);
}

TEST(HexLayout, CellCounts) {
  EXPECT_EQ(hex_layout(1e6, 500.0).size(), 1u);
  EXPECT_EQ(hex_layout(1e6, 800.0).size(), 1u);
  const double expected = 1e6 / (1.5 * std::sqrt(3.0) * 65.0 * 65.0);
  EXPECT_NEAR(static_cast<double>(hex_layout(1e6, 65.0).size()), expected, 0.1 * expected);
  const double ratio = static_cast<double>(hex_layout(1e6, 50.0).size()) /
                       static_cast<double>(hex_layout(1e6, 100.0).size());
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
  EXPECT_THROW(hex_layout(1e6, 0.0), InvalidArgument);
  EXPECT_THROW(hex_layout(0.0, 10.0), InvalidArgument);
}

TEST(HexLayout, NearestNeighbourSpacing) {
  const CellLayout layout = hex_layout(1e6, 80.0);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    double nearest = INFINITY;
    for (std::size_t j = 0; j < layout.size(); ++j) {
      if (i == j) continue;
      nearest = std::min(nearest, std::hypot(layout.bs_positions[i].x - layout.bs_positions[j].x,
                                             layout.bs_positions[i].y - layout.bs_positions[j].y));
    }
    EXPECT_NEAR(nearest, std::sqrt(3.0) * 80.0, 1e-9);
  }
}

TEST(HexLayout, PointInHexagon) {
  EXPECT_TRUE(inside_hexagon({0.0, 10.0}, {0.0, 0.0}, 10.0));
  EXPECT_FALSE(inside_hexagon({0.0, 10.01}, {0.0, 0.0}, 10.0));
  EXPECT_TRUE(inside_hexagon({5.0 * std::sqrt(3.0), 0.0}, {0.0, 0.0}, 10.0));
  EXPECT_FALSE(inside_hexagon({8.7, 0.0}, {0.0, 0.0}, 10.0));
  EXPECT_FALSE(inside_hexagon({8.0, 6.0}, {0.0, 0.0}, 10.0));
}

TEST(DropUes, DeterministicAndInside) {
  const CellLayout layout = hex_layout(1e6, 100.0);
  const auto a = drop_ues(layout, 15, 42, 3);
  const auto b = drop_ues(layout, 15, 42, 3);
  const auto c = drop_ues(layout, 15, 43, 3);
  ASSERT_EQ(a.size(), layout.size());
  bool differs = false;
  for (std::size_t cell = 0; cell < a.size(); ++cell) {
    ASSERT_EQ(a[cell].size(), 15u);
    for (std::size_t k = 0; k < 15; ++k) {
      EXPECT_EQ(a[cell][k].x, b[cell][k].x);
      EXPECT_EQ(a[cell][k].y, b[cell][k].y);
      EXPECT_TRUE(inside_hexagon(a[cell][k], layout.bs_positions[cell], 100.0));
      differs = differs || a[cell][k].x != c[cell][k].x;
    }
  }
  EXPECT_TRUE(differs);
}

TEST(DropUes, MeanDistanceMatchesHexagonMoment) {
  // Exact mean distance from the centre of a regular hexagon of circumradius r.
  const double moment = 0.607986405500360756;
  StreamRng rng(9, 0, 0);
  const int n = 400000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point p = rng.in_hexagon({0.0, 0.0}, 1.0);
    sum += std::hypot(p.x, p.y);
  }
  EXPECT_NEAR(sum / n, moment, 2e-3);
}

TEST(StreamRng, UniformRangeAndIndependentStreams) {
  StreamRng a(1, 0, 0);
  StreamRng b(1, 1, 0);
  StreamRng c(1, 0, 1);
  int equal = 0;
  for (int i = 0; i < 1000; ++i) {
    const double ua = a.uniform();
    EXPECT_GE(ua, 0.0);
    EXPECT_LT(ua, 1.0);
    const double ub = b.uniform();
    const double uc = c.uniform();
    equal += (ua == ub) + (ua == uc);
  }
  EXPECT_EQ(equal, 0);
}

TEST(PowerControl, HalvingRadiusSavesSixDecibels) {
  const BandProfile band = default_network_scenario().band;
  for (double r : {40.0, 130.0, 500.0}) {
    const double full = power_control_eirp_dbm(r, band, 20.0, 29.1);
    const double half = power_control_eirp_dbm(r / 2.0, band, 20.0, 29.1);
    EXPECT_NEAR(full - half, 20.0 * std::log10(2.0), 1e-9);
  }
}

TEST(PowerControl, ComposedFromPrimitives) {
  const BandProfile band = default_network_scenario().band;
  EXPECT_NEAR(power_control_eirp_dbm(100.0, band, 20.0, 59.149239330737134), 8.2662988120758576,
              1e-9);
  const double at_1m = 20.0 + noise_power_dbm(NoiseSpec{4e9, 10.0, 290.0}) + fspl_1m_db(140e9) - 29.0;
  EXPECT_NEAR(power_control_eirp_dbm(1.0, band, 20.0, 29.0), at_1m, 1e-12);
  EXPECT_THROW(power_control_eirp_dbm(0.5, band, 20.0, 29.0), InvalidArgument);
}

TEST(Sinr, Basics) {
  EXPECT_NEAR(sinr_db(1e-9, 1e-12, {}), 30.0, 1e-12);
  const std::vector<double> same{1e-6};
  EXPECT_NEAR(sinr_db(1e-6, 1e-30, same), 0.0, 1e-12);
  const std::vector<double> some{1e-12, 3e-12};
  EXPECT_LT(sinr_db(1e-9, 1e-12, some), sinr_db(1e-9, 1e-12, {}));
  EXPECT_THROW(sinr_db(0.0, 1e-12, {}), InvalidArgument);
}

NetworkScenario small(double radius) {
  NetworkScenario s = default_network_scenario();
  s.area_m2 = 400.0 * 400.0;
  s.cell_radius_m = radius;
  s.drops = 4;
  s.keep_samples = true;
  return s;
}

TEST(Network, CefIsThroughputOverPower) {
  const NetworkReport r = simulate_network(small(40.0));
  EXPECT_EQ(r.network_cef_bpj, r.total_throughput_bps / r.total_power_w);
  EXPECT_GT(r.cells, 10u);
  EXPECT_EQ(r.samples.size(), r.cells * 4 * 15);
}

TEST(Network, InterferenceOnlyLowersSinr) {
  const NetworkReport r = simulate_network(small(40.0));
  bool some_lower = false;
  for (const auto& u : r.samples) {
    EXPECT_LE(u.sinr_db, u.snr_db + 1e-12);
    some_lower = some_lower || u.sinr_db < u.snr_db - 1.0;
  }
  EXPECT_TRUE(some_lower);

  NetworkScenario quiet = small(40.0);
  quiet.interference = false;
  for (const auto& u : simulate_network(quiet).samples) EXPECT_EQ(u.sinr_db, u.snr_db);
}

TEST(Network, PowerControlHoldsEdgeSnr) {
  for (double r : {20.0, 65.0, 150.0}) {
    NetworkScenario s = small(r);
    s.interference = false;
    s.los = {1e9, 113.4};
    s.drops = 2;
    for (const auto& u : simulate_network(s).samples) {
      ASSERT_TRUE(u.los);
      const double expected = s.target_edge_snr_db + 20.0 * std::log10(r / std::max(u.distance_m, 1.0));
      EXPECT_NEAR(u.snr_db, expected, 1e-9);
      EXPECT_GE(u.snr_db, s.target_edge_snr_db - 0.01);
    }
  }
}

TEST(Network, SingleUserReducesToLinkEvaluation) {
  NetworkScenario s = default_network_scenario();
  s.area_m2 = 100.0 * 100.0;
  s.cell_radius_m = 65.0;
  s.ues_per_cell = 1;
  s.drops = 1;
  s.interference = false;
  s.los = {1e9, 113.4};
  s.keep_samples = true;
  const NetworkReport r = simulate_network(s);
  ASSERT_EQ(r.cells, 1u);
  ASSERT_EQ(r.samples.size(), 1u);

  LinkScenario link = preset_scenario("subthz-140");
  link.direction = Direction::Downlink;
  link.environment = Environment::LoS;
  link.distance_m = r.samples[0].distance_m;
  link.tx_power_dbm = r.eirp_dbm - terminal_gain_dbi(link.bs, link);
  const LinkReport expected = evaluate_link(link);
  EXPECT_NEAR(r.total_throughput_bps / expected.rate_bps, 1.0, 1e-12);
  EXPECT_NEAR(r.total_power_w / expected.p_consumed_w, 1.0, 1e-12);
  EXPECT_NEAR(r.network_cef_bpj / expected.cef_bpj, 1.0, 1e-12);
}

TEST(Network, IdenticalAcrossThreadCounts) {
  NetworkScenario s = small(30.0);
  s.threads = 1;
  const NetworkReport a = simulate_network(s);
  s.threads = 3;
  const NetworkReport b = simulate_network(s);
  EXPECT_EQ(a.network_cef_bpj, b.network_cef_bpj);
  EXPECT_EQ(a.total_throughput_bps, b.total_throughput_bps);
  EXPECT_EQ(a.sinr.median_db, b.sinr.median_db);
  EXPECT_EQ(a.ci_halfwidth_bpj, b.ci_halfwidth_bpj);
}

TEST(Network, MoreDropsStayWithinConfidence) {
  NetworkScenario s = default_network_scenario();
  s.cell_radius_m = 100.0;
  s.drops = 10;
  const NetworkReport a = simulate_network(s);
  s.drops = 20;
  const NetworkReport b = simulate_network(s);
  EXPECT_GT(a.ci_halfwidth_bpj, 0.0);
  EXPECT_LT(std::abs(a.network_cef_bpj - b.network_cef_bpj), a.ci_halfwidth_bpj);
}

TEST(Network, SmallCellsBeatLargeCells) {
  NetworkScenario s = default_network_scenario();
  s.drops = 5;
  const double radii[] = {65.0, 500.0};
  const RadiusSweep sw = sweep_radius(s, radii);
  EXPECT_GT(sw.reports[0].network_cef_bpj, sw.reports[1].network_cef_bpj);
  EXPECT_EQ(sw.argmax_radius_m, 65.0);
}

TEST(Network, RejectsBadScenario) {
  NetworkScenario s = default_network_scenario();
  s.drops = 0;
  EXPECT_THROW(simulate_network(s), InvalidArgument);
  s = default_network_scenario();
  s.arrays_per_bs = 0;
  EXPECT_THROW(simulate_network(s), InvalidArgument);
}

}  // namespace
