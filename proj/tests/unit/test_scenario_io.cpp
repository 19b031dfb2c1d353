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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cefkit/error.hpp"
#include "cefkit/scenario_io.hpp"

namespace {

using namespace cefkit;

ParseError parse_error(const std::string& text, std::vector<std::string> overrides = {}) {
  try {
    parse_scenario(text, overrides);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "");
}

TEST(Scenario, PresetFillsEmptySection) {
  const ScenarioDocument d = parse_scenario("preset = \"subthz-140\"\n[band]\n");
  EXPECT_EQ(d.link.band.bandwidth_hz, 4e9);
  EXPECT_EQ(d.link.band.pa_efficiency, 0.208);
  EXPECT_EQ(d.link.band.lna_fom_per_mw, 8.33);
  EXPECT_EQ(d.preset, "subthz-140");
  const ScenarioDocument in_band = parse_scenario("[band]\npreset = \"subthz-140\"\n");
  EXPECT_EQ(in_band.link, d.link);
}

TEST(Scenario, DefaultsWithoutPreset) {
  const ScenarioDocument d = parse_scenario("");
  EXPECT_EQ(d.link, preset_scenario("mmwave-28"));
  EXPECT_TRUE(d.preset.empty());
}

TEST(Scenario, UnitNormalisation) {
  const ScenarioDocument a = parse_scenario("[band]\nbandwidth = 400 MHz\n");
  const ScenarioDocument b = parse_scenario("[band]\nbandwidth = 0.4 GHz\n");
  EXPECT_EQ(a, b);
}

TEST(Scenario, AllSections) {
  const ScenarioDocument d = parse_scenario(R"(# comment
preset = "mmwave-28"
[band]
pa_efficiency = 20 %      # trailing comment
lo_power = 0.1 W
[bs]
elements = 256
cooling = 0.3
[ue]
aperture = 4 cm2
screen_power = 300 mW
[link]
direction = "dl"
environment = nlos
distance = 0.2 km
tx_power = -3 dBm
ple_nlos = 3.5
[network]
cell_radius = 80 m
drops = 7
seed = 99
interference = false
)");
  EXPECT_DOUBLE_EQ(d.link.band.pa_efficiency, 0.2);
  EXPECT_NEAR(d.link.band.lo_power_dbm, 20.0, 1e-12);
  EXPECT_EQ(d.link.bs.element_count, 256);
  EXPECT_DOUBLE_EQ(d.link.bs.cooling_overhead, 0.3);
  EXPECT_DOUBLE_EQ(d.link.ue.aperture_area_m2, 4e-4);
  EXPECT_DOUBLE_EQ(d.link.ue.screen_power_w, 0.3);
  EXPECT_EQ(d.link.direction, Direction::Downlink);
  EXPECT_EQ(d.link.environment, Environment::NLoS);
  EXPECT_DOUBLE_EQ(d.link.distance_m, 200.0);
  EXPECT_DOUBLE_EQ(d.link.tx_power_dbm, -3.0);
  EXPECT_DOUBLE_EQ(d.link.ple_nlos, 3.5);
  EXPECT_DOUBLE_EQ(d.network.cell_radius_m, 80.0);
  EXPECT_EQ(d.network.drops, 7);
  EXPECT_EQ(d.network.seed, 99u);
  EXPECT_FALSE(d.network.interference);
  // The network study shares the link's band and terminals.
  EXPECT_EQ(d.network.band, d.link.band);
  EXPECT_EQ(d.network.bs, d.link.bs);
}

TEST(Scenario, RangeErrorAtItsLine) {
  const ParseError e = parse_error("[band]\nfrequency = 28 GHz\npa_efficiency = 1.2\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 17u);
}

TEST(Scenario, Rejections) {
  EXPECT_EQ(parse_error("[band]\ncolour = 3 GHz\n").line(), 2u);
  EXPECT_EQ(parse_error("[band]\nbandwidth = 400\n").column(), 16u);
  EXPECT_EQ(parse_error("[band]\nbandwidth = 400 dB\n").line(), 2u);
  EXPECT_EQ(parse_error("[radio]\n").line(), 1u);
  EXPECT_EQ(parse_error("bandwidth = 4 GHz\n").line(), 1u);
  EXPECT_EQ(parse_error("[band]\nbandwidth\n").line(), 2u);
  EXPECT_EQ(parse_error("[band]\nbandwidth = 1 GHz\nbandwidth = 2 GHz\n").line(), 3u);
  EXPECT_EQ(parse_error("preset = \"nope\"\n").line(), 1u);
  EXPECT_EQ(parse_error("[link]\ndirection = \"up\"\n").line(), 2u);
  EXPECT_EQ(parse_error("[bs]\nelements = 2.5\n").line(), 2u);
  EXPECT_EQ(parse_error("[link]\ndistance = 0.5 m\n").line(), 2u);
  EXPECT_EQ(parse_error("[band\n").line(), 1u);
}

TEST(Scenario, Overrides) {
  const std::vector<std::string> sets{"band.bandwidth=2GHz", "link.direction=dl"};
  const ScenarioDocument d = parse_scenario("[band]\nbandwidth = 400 MHz\n", sets);
  EXPECT_EQ(d.link.band.bandwidth_hz, 2e9);
  EXPECT_EQ(d.link.direction, Direction::Downlink);

  const ScenarioDocument p = parse_scenario("", {{"preset=\"subthz-140\""}});
  EXPECT_EQ(p.link.band.carrier_frequency_hz, 140e9);

  const ParseError e = parse_error("", {"band.nope=1"});
  EXPECT_EQ(e.line(), 0u);
  EXPECT_EQ(parse_error("", {"bandwidth"}).line(), 0u);
}

TEST(Scenario, CanonicalRoundTrip) {
  for (const char* text : {"", "preset = \"subthz-140\"\n",
                           "[band]\nbandwidth = 123.456 MHz\npa_efficiency = 33.3 %\n[link]\n"
                           "tx_power = 0.7 mW\ndistance = 77.7 m\n[network]\nseed = 18446744073709551615\n"}) {
    const ScenarioDocument d = parse_scenario(text);
    const std::string canonical = serialize_scenario(d);
    const ScenarioDocument again = parse_scenario(canonical);
    EXPECT_EQ(again, d) << canonical;
    EXPECT_EQ(serialize_scenario(again), canonical);
  }
}

TEST(Scenario, PresetDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "cefkit-preset-test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "lab.scn");
    f << "preset = \"subthz-140\"\n[band]\nbandwidth = 1 GHz\n";
  }
  ::setenv(kPresetDirEnv, dir.c_str(), 1);
  const ScenarioDocument d = parse_scenario("preset = \"lab\"\n");
  EXPECT_EQ(d.link.band.bandwidth_hz, 1e9);
  EXPECT_EQ(d.link.band.carrier_frequency_hz, 140e9);
  EXPECT_EQ(d.preset, "lab");
  EXPECT_EQ(parse_scenario(serialize_scenario(d)), d);
  ::unsetenv(kPresetDirEnv);
  EXPECT_THROW(load_preset("lab"), InvalidArgument);
  std::filesystem::remove_all(dir);
}

TEST(Scenario, ShippedPresetFilesMatchBuiltins) {
  for (const auto& name : preset_names()) {
    const ScenarioDocument file =
        load_scenario_file(std::string(CEFKIT_DATA_DIR) + "/presets/" + name + ".scn");
    EXPECT_EQ(file, load_preset(name)) << name;
  }
  EXPECT_THROW(load_scenario_file("/nonexistent/x.scn"), InvalidArgument);
}

}  // namespace
