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
#include "cefkit/link_budget.hpp"
#include "cefkit/transceiver.hpp"

namespace {

using namespace cefkit;

LinkScenario scenario(const char* preset, Direction d, Environment e) {
  LinkScenario s = preset_scenario(preset);
  s.direction = d;
  s.environment = e;
  return s;
}

TEST(Presets, BandParameters) {
  const LinkScenario mm = preset_scenario("mmwave-28");
  EXPECT_EQ(mm.band.carrier_frequency_hz, 28e9);
  EXPECT_EQ(mm.band.bandwidth_hz, 400e6);
  EXPECT_EQ(mm.band.pa_efficiency, 0.28);
  EXPECT_EQ(mm.bs.element_count, 1024);
  EXPECT_EQ(mm.ue.element_count, 8);
  const LinkScenario thz = preset_scenario("subthz-140");
  EXPECT_EQ(thz.band.bandwidth_hz, 4e9);
  EXPECT_EQ(thz.band.pa_efficiency, 0.208);
  EXPECT_EQ(thz.band.lna_fom_per_mw, 8.33);
  EXPECT_EQ(thz.bs.element_count, 4096);
  EXPECT_THROW(preset_scenario("wifi"), InvalidArgument);
}

TEST(Presets, LnaDcPerElement) {
  EXPECT_NEAR(preset_scenario("mmwave-28").band.lna_dc_per_element_w(), 0.1 / 24.83, 1e-15);
}

TEST(Validate, RejectsOutOfRange) {
  LinkScenario s = preset_scenario("mmwave-28");
  s.band.pa_efficiency = 1.2;
  EXPECT_THROW(validate(s), InvalidArgument);
  s = preset_scenario("mmwave-28");
  s.distance_m = 0.5;
  EXPECT_THROW(validate(s), InvalidArgument);
  s = preset_scenario("mmwave-28");
  s.ue.element_count = 0;
  EXPECT_THROW(validate(s), InvalidArgument);
}

TEST(Link, ReceivedPowerFromBudget) {
  const LinkReport r = evaluate_link(scenario("mmwave-28", Direction::Uplink, Environment::LoS));
  const double expected_dbm = 0.0 + 45.169839244016758 + 15.169839244016758 - (61.390725337041096 + 40.0);
  EXPECT_NEAR(r.p_received_dbw, expected_dbm - 30.0, 1e-9);
  EXPECT_NEAR(r.eirp_dbm, 15.169839244016758, 1e-9);
}

TEST(Link, DerivedNoiseFigureReproducesRate) {
  // Back-solving the receiver noise figure from a 4.89 Gb/s rate lands on 10 dB.
  const LinkReport r = evaluate_link(scenario("mmwave-28", Direction::Uplink, Environment::LoS));
  const double snr_needed_db = 10.0 * std::log10(std::pow(2.0, 4.89e9 / 400e6) - 1.0);
  const double ktb_dbm = noise_power_dbm(NoiseSpec{400e6, 0.0, 290.0});
  const double nf = (r.p_received_dbw + 30.0) - ktb_dbm - snr_needed_db;
  EXPECT_NEAR(nf, 10.0, 0.2);
}

TEST(Link, CefIsRateOverPower) {
  for (const char* band : {"mmwave-28", "subthz-140"}) {
    for (Direction d : {Direction::Uplink, Direction::Downlink}) {
      for (Environment e : {Environment::LoS, Environment::NLoS}) {
        const LinkReport r = evaluate_link(scenario(band, d, e));
        EXPECT_EQ(r.cef_bpj, r.rate_bps / r.p_consumed_w);
      }
    }
  }
}

TEST(Link, ConsumedPowerMatchesStageBookkeeping) {
  const LinkScenario s = scenario("subthz-140", Direction::Downlink, Environment::NLoS);
  const LinkChain chain = build_chain(s);
  EXPECT_NEAR(consumed_power(chain.cascade) / bookkeeping_oracle(chain.cascade).total_consumed, 1.0,
              1e-12);
  EXPECT_NEAR(evaluate_link(s).p_consumed_w, consumed_power(chain.cascade), 1e-12);
}

TEST(Link, ChainLayout) {
  const LinkChain chain = build_chain(scenario("mmwave-28", Direction::Uplink, Environment::LoS));
  ASSERT_EQ(chain.cascade.size(), 7u);
  EXPECT_EQ(chain.channel_index, 3u);
  EXPECT_EQ(chain.stage_side[0], Side::Transmitter);
  EXPECT_EQ(chain.stage_side[3], Side::Channel);
  EXPECT_EQ(chain.stage_side[6], Side::Receiver);
  EXPECT_TRUE(chain.cascade.components()[3].is_passive());
}

TEST(Link, UplinkWasteFigureAt28GHz) {
  EXPECT_NEAR(evaluate_link(scenario("mmwave-28", Direction::Uplink, Environment::LoS)).waste_figure_db,
              52.2, 0.5);
  EXPECT_NEAR(evaluate_link(scenario("mmwave-28", Direction::Uplink, Environment::NLoS)).waste_figure_db,
              76.2, 0.5);
}

TEST(Link, EnvironmentGapTracksPathLoss) {
  for (const char* band : {"mmwave-28", "subthz-140"}) {
    for (Direction d : {Direction::Uplink, Direction::Downlink}) {
      const double los = evaluate_link(scenario(band, d, Environment::LoS)).waste_figure_db;
      const double nlos = evaluate_link(scenario(band, d, Environment::NLoS)).waste_figure_db;
      EXPECT_NEAR(nlos - los, 24.0, 0.1) << band;
    }
  }
}

TEST(Link, ReplacingChannelShiftsWaste) {
  const LinkChain chain = build_chain(scenario("subthz-140", Direction::Uplink, Environment::LoS));
  const double loss = chain.cascade.components()[chain.channel_index].waste_factor();
  const Cascade worse = replace_channel(chain, make_passive(loss * 10.0));
  EXPECT_NEAR(linear_to_db(cascade_waste_factor(worse)) -
                  linear_to_db(cascade_waste_factor(chain.cascade)),
              10.0, 0.01);
}

TEST(Link, RequiredDriveHitsTarget) {
  LinkScenario s = scenario("subthz-140", Direction::Downlink, Environment::NLoS);
  s.tx_power_dbm = required_tx_power_dbm(s, 20.0);
  EXPECT_NEAR(evaluate_link(s).snr_db, 20.0, 1e-9);
}

TEST(Link, MoreTransmitElementsCostPowerNotSignal) {
  LinkScenario a = scenario("mmwave-28", Direction::Downlink, Environment::LoS);
  LinkScenario b = a;
  b.bs.element_count *= 2;
  const LinkReport ra = evaluate_link(a);
  const LinkReport rb = evaluate_link(b);
  EXPECT_DOUBLE_EQ(ra.p_received_dbw, rb.p_received_dbw);
  EXPECT_GT(rb.p_consumed_w, ra.p_consumed_w);
}

TEST(Link, OverTheAirGainRejected) {
  LinkScenario s = scenario("mmwave-28", Direction::Uplink, Environment::LoS);
  s.distance_m = 1.0;
  s.bs.aperture_area_m2 = 1000.0;
  EXPECT_THROW(evaluate_link(s), EvaluationError);
}

TEST(LinkMatrix, CellsAndOrderings) {
  const LinkMatrix m = table1_report();
  ASSERT_EQ(m.cells.size(), 8u);
  EXPECT_EQ(m.cells[0].band, "mmwave-28");
  EXPECT_EQ(m.cells[1].environment, Environment::NLoS);
  EXPECT_EQ(m.cells[2].direction, Direction::Downlink);
  for (const char* band : {"mmwave-28", "subthz-140"}) {
    EXPECT_GT(m.at(band, Direction::Uplink, Environment::LoS).p_consumed_w,
              m.at(band, Direction::Downlink, Environment::LoS).p_consumed_w);
  }
  for (Direction d : {Direction::Uplink, Direction::Downlink}) {
    EXPECT_GT(m.at("subthz-140", d, Environment::LoS).p_consumed_w,
              m.at("mmwave-28", d, Environment::LoS).p_consumed_w);
    for (Environment e : {Environment::LoS, Environment::NLoS}) {
      EXPECT_GT(m.cef_ratio("subthz-140", "mmwave-28", d, e), 1.0);
    }
  }
  EXPECT_NEAR(m.waste_gap_db("mmwave-28", Direction::Uplink), 24.0, 0.1);
  EXPECT_THROW(m.at("x", Direction::Uplink, Environment::LoS), InvalidArgument);
}

}  // namespace
