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

#include "cefkit/error.hpp"
#include "cefkit/sweeps.hpp"

namespace {

using namespace cefkit;

SweepSpec bandwidth_spec(Direction d, double snr = 20.0) {
  SweepSpec s;
  s.scenario = preset_scenario("subthz-140");
  s.scenario.direction = d;
  s.snr_target_db = snr;
  return s;
}

double reference_cef(Direction d, double snr) {
  LinkScenario ref = preset_scenario("mmwave-28");
  ref.direction = d;
  ref.tx_power_dbm = required_tx_power_dbm(ref, snr);
  return evaluate_link(ref).cef_bpj;
}

TEST(SweepGrid, LogAndLinear) {
  SweepSpec s = bandwidth_spec(Direction::Downlink);
  s.lo = 1e8;
  s.hi = 1e10;
  s.points = 3;
  const auto g = sweep_grid(s);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_DOUBLE_EQ(g[0], 1e8);
  EXPECT_NEAR(g[1], 1e9, 1e-3);
  EXPECT_DOUBLE_EQ(g[2], 1e10);

  s.parameter = SweepParameter::PaEfficiency;
  s.lo = 0.1;
  s.hi = 0.5;
  const auto e = sweep_grid(s);
  EXPECT_NEAR(e[1], 0.3, 1e-15);
  EXPECT_EQ(s.effective_spacing(), Spacing::Linear);
}

TEST(SweepGrid, RejectsBadRanges) {
  SweepSpec s = bandwidth_spec(Direction::Downlink);
  s.lo = s.hi;
  EXPECT_THROW(sweep_grid(s), InvalidArgument);
  s = bandwidth_spec(Direction::Downlink);
  s.points = 0;
  EXPECT_THROW(sweep_grid(s), InvalidArgument);
  s.points = 8;
  s.parameter = SweepParameter::PaEfficiency;
  s.lo = 0.1;
  s.hi = 1.5;
  EXPECT_THROW(sweep_grid(s), InvalidArgument);
}

TEST(Sweep, SinglePointIsOneLinkEvaluation) {
  SweepSpec s;
  s.scenario = preset_scenario("mmwave-28");
  s.lo = s.hi = 400e6;
  s.points = 1;
  const Curve c = sweep(s);
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_EQ(c.points[0].cef_bpj, evaluate_link(s.scenario).cef_bpj);
}

TEST(Sweep, EfficiencyNeverHurts) {
  SweepSpec s;
  s.scenario = preset_scenario("subthz-140");
  s.parameter = SweepParameter::PaEfficiency;
  s.lo = 0.01;
  s.hi = 1.0;
  s.points = 40;
  for (Direction d : {Direction::Uplink, Direction::Downlink}) {
    s.scenario.direction = d;
    const Curve c = sweep(s);
    for (std::size_t i = 1; i < c.points.size(); ++i) {
      EXPECT_GE(c.points[i].cef_bpj, c.points[i - 1].cef_bpj);
    }
  }
}

TEST(Sweep, HeldSnrDriveRisesWithBandwidth) {
  SweepSpec s = bandwidth_spec(Direction::Downlink);
  const CurvePoint a = evaluate_sample(s, 1e9);
  const CurvePoint b = evaluate_sample(s, 2e9);
  EXPECT_NEAR(b.eirp_dbm - a.eirp_dbm, 10.0 * std::log10(2.0), 1e-9);
  EXPECT_NEAR(a.snr_db, 20.0, 1e-9);
}

TEST(Sweep, InfeasibleSamplesFlaggedNotThrown) {
  SweepSpec s = bandwidth_spec(Direction::Downlink);
  s.eirp_ceiling_dbm = 40.0;
  const Curve c = sweep(s);
  EXPECT_TRUE(c.points.front().feasible);
  EXPECT_FALSE(c.points.back().feasible);
  EXPECT_NEAR(c.points.back().eirp_dbm, 40.0, 1e-9);
  EXPECT_LT(c.points.back().snr_db, 20.0);
}

TEST(Sweep, OutputIndependentOfThreadCount) {
  SweepSpec s = bandwidth_spec(Direction::Uplink);
  s.threads = 1;
  const Curve one = sweep(s);
  s.threads = 4;
  const Curve four = sweep(s);
  ASSERT_EQ(one.points.size(), four.points.size());
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    EXPECT_EQ(one.points[i].x, four.points[i].x);
    EXPECT_EQ(one.points[i].cef_bpj, four.points[i].cef_bpj);
  }
}

TEST(Crossover, BracketedAndRefined) {
  const SweepSpec s = bandwidth_spec(Direction::Downlink);
  const Curve c = sweep(s);
  const double ref = reference_cef(Direction::Downlink, 20.0);
  const Crossover x = find_crossover(s, c, ref);
  ASSERT_TRUE(x.found);
  ASSERT_GT(x.bracket_index, 0u);
  EXPECT_GT(x.x, c.points[x.bracket_index - 1].x);
  EXPECT_LE(x.x, c.points[x.bracket_index].x);
  EXPECT_GE(evaluate_sample(s, x.x).cef_bpj, ref);
  EXPECT_LT(evaluate_sample(s, x.x * (1.0 - 1e-5)).cef_bpj, ref);
}

TEST(Crossover, StableUnderGridRefinement) {
  SweepSpec s = bandwidth_spec(Direction::Uplink);
  const double ref = reference_cef(Direction::Uplink, 20.0);
  const Crossover coarse = find_crossover(s, sweep(s), ref);
  s.points = 127;
  const Crossover fine = find_crossover(s, sweep(s), ref);
  ASSERT_TRUE(coarse.found && fine.found);
  EXPECT_LT(std::abs(fine.x - coarse.x) / coarse.x, 1e-3);
}

TEST(Crossover, NoneWhenReferenceAboveCurve) {
  const SweepSpec s = bandwidth_spec(Direction::Downlink);
  const Crossover x = find_crossover(s, sweep(s), 1e30);
  EXPECT_FALSE(x.found);
}

TEST(Crossover, CurveCrossing) {
  const SweepSpec a = bandwidth_spec(Direction::Downlink, 20.0);
  const SweepSpec b = bandwidth_spec(Direction::Downlink, 30.0);
  const Curve ca = sweep(a);
  const Curve cb = sweep(b);
  const Crossover x = find_curve_crossing(a, ca, b, cb);
  ASSERT_TRUE(x.found);
  EXPECT_NEAR(evaluate_sample(a, x.x).cef_bpj / evaluate_sample(b, x.x).cef_bpj, 1.0, 1e-5);

  SweepSpec other = b;
  other.points = 10;
  EXPECT_THROW(find_curve_crossing(a, ca, other, sweep(other)), InvalidArgument);
}

TEST(MatchingEfficiency, Endpoints) {
  LinkScenario s = preset_scenario("subthz-140");
  s.direction = Direction::Downlink;
  EXPECT_DOUBLE_EQ(min_matching_efficiency(0.0, s).efficiency, 1e-3);

  LinkScenario full = s;
  full.band.pa_efficiency = 1.0;
  const EfficiencyMatch top = min_matching_efficiency(evaluate_link(full).cef_bpj, s);
  EXPECT_TRUE(top.achievable);
  EXPECT_DOUBLE_EQ(top.efficiency, 1.0);

  const EfficiencyMatch none = min_matching_efficiency(evaluate_link(full).cef_bpj * 1.01, s);
  EXPECT_FALSE(none.achievable);
}

TEST(MatchingEfficiency, MeetsTargetWithinTolerance) {
  LinkScenario s = preset_scenario("subthz-140");
  s.direction = Direction::Downlink;
  LinkScenario probe = s;
  probe.band.pa_efficiency = 0.3;
  const double target = evaluate_link(probe).cef_bpj;
  const EfficiencyMatch m = min_matching_efficiency(target, s);
  ASSERT_TRUE(m.achievable);
  EXPECT_NEAR(m.efficiency, 0.3, 1e-4);
  EXPECT_GE(m.cef_at_efficiency, target);
}

TEST(EfficiencySlope, UplinkLessSensitive) {
  for (const char* band : {"mmwave-28", "subthz-140"}) {
    LinkScenario ul = preset_scenario(band);
    LinkScenario dl = ul;
    dl.direction = Direction::Downlink;
    for (double eta : {0.05, 0.2, 0.5}) {
      EXPECT_LT(cef_efficiency_slope(ul, eta), cef_efficiency_slope(dl, eta)) << band << " " << eta;
    }
  }
}

}  // namespace
