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

#ifndef CEFKIT_TRANSCEIVER_HPP
#define CEFKIT_TRANSCEIVER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cefkit/cascade.hpp"
#include "cefkit/units.hpp"

namespace cefkit {

enum class Role { BaseStation, UserEquipment };
enum class Environment { LoS, NLoS };
enum class Direction { Uplink, Downlink };

std::string_view to_string(Role role);
std::string_view to_string(Environment environment);
std::string_view to_string(Direction direction);

/// Per-band device parameters shared by both ends of a link.
struct BandProfile {
  std::string name;
  double carrier_frequency_hz = 28e9;
  double bandwidth_hz = 400e6;
  double pa_efficiency = 0.28;
  double pa_gain_db = 20.0;
  double lna_gain_db = 20.0;
  double lna_fom_per_mw = 24.83;  // gain per mW of DC
  double mixer_loss_db = 6.0;
  double phase_shifter_loss_db = 10.0;
  double lo_power_dbm = 10.0;
  double converter_power_per_hz = 1e-12;  // W/Hz, ADC or DAC at each terminal

  /// DC drawn by one LNA: linear gain / FoM, in watts.
  double lna_dc_per_element_w() const;

  bool operator==(const BandProfile&) const = default;
};

struct TerminalProfile {
  Role role = Role::BaseStation;
  double aperture_area_m2 = 0.5;
  double antenna_efficiency = 0.6;
  int element_count = 1024;
  double cooling_overhead = 0.0;  // fraction of the terminal's own consumption
  double screen_power_w = 0.0;

  bool operator==(const TerminalProfile&) const = default;
};

/// One band / direction / environment evaluation point.
///
/// `tx_power_dbm` is the drive delivered by each PA element; the array's
/// aggregate conducted output is element_count times that. Link budgets use
/// the per-element drive with the full aperture gains.
struct LinkScenario {
  BandProfile band;
  TerminalProfile bs;
  TerminalProfile ue;
  double distance_m = 100.0;
  Environment environment = Environment::LoS;
  Direction direction = Direction::Uplink;
  double tx_power_dbm = 0.0;
  double ple_los = 2.0;
  double ple_nlos = 3.2;
  double noise_figure_db = 10.0;
  double temperature_k = kReferenceTemperature;
  double speed_of_light = kSpeedOfLight;

  const TerminalProfile& transmitter() const;
  const TerminalProfile& receiver() const;
  double ple() const;

  bool operator==(const LinkScenario&) const = default;
};

/// Throws InvalidArgument describing the first violated field.
void validate(const LinkScenario& scenario);

/// Names of the shipped band presets: "mmwave-28", "subthz-140".
std::vector<std::string> preset_names();

/// Full uplink/LoS/100 m scenario for a preset. Throws InvalidArgument on an
/// unknown name.
LinkScenario preset_scenario(std::string_view name);

double terminal_gain_dbi(const TerminalProfile& terminal, const LinkScenario& scenario);
double path_loss_db(const LinkScenario& scenario);
double noise_power_dbm(const LinkScenario& scenario);

/// Per-element drive that puts the receiver at `snr_db`.
double required_tx_power_dbm(const LinkScenario& scenario, double snr_db);

/// Mixer -> phase shifters -> PA bank, with the source sized so that the
/// bank delivers element_count * 10^(tx_power_dbm/10) mW.
Cascade transmit_section(const BandProfile& band, const TerminalProfile& terminal,
                         double tx_power_dbm);

/// LNA bank as a fixed-overhead stage: W = 1, DC = elements * G / FoM.
Component lna_bank(const BandProfile& band, const TerminalProfile& terminal);

/// LO + one converter at the given bandwidth, plus the screen.
double terminal_overhead_w(const BandProfile& band, const TerminalProfile& terminal);

enum class Side { Transmitter, Channel, Receiver };

/// End-to-end cascade of one link plus the bookkeeping needed to report it.
struct LinkChain {
  Cascade cascade;
  std::vector<Side> stage_side;
  std::size_t channel_index = 0;
  double path_loss_db = 0.0;
  double tx_gain_dbi = 0.0;
  double rx_gain_dbi = 0.0;
};

/// Transmit section, over-the-air stage (TX array, CI channel, RX array:
/// passive, gain = P_r / aggregate drive), LNA bank, phase shifters, mixer.
/// Off-path loads: LO and converter at both ends, the UE screen, and each
/// terminal's cooling overhead on its own signal-path and non-path draw.
LinkChain build_chain(const LinkScenario& scenario);

/// The same chain with the over-the-air stage swapped out.
Cascade replace_channel(const LinkChain& chain, Component replacement);

struct LinkReport {
  double waste_figure_db = 0.0;
  double cascade_gain_db = 0.0;
  double p_received_dbw = 0.0;
  double snr_db = 0.0;
  double rate_bps = 0.0;
  double p_consumed_w = 0.0;
  double cef_bpj = 0.0;

  double fspl_1m_db = 0.0;
  double path_loss_db = 0.0;
  double eirp_dbm = 0.0;
};

LinkReport evaluate_link(const LinkScenario& scenario);

struct LinkMatrixCell {
  std::string band;
  Direction direction = Direction::Uplink;
  Environment environment = Environment::LoS;
  LinkReport report;
};

/// Band x direction x environment matrix. Cells are ordered band-major, then
/// uplink before downlink, then LoS before NLoS.
struct LinkMatrix {
  std::vector<std::string> bands;
  std::vector<LinkMatrixCell> cells;

  const LinkReport& at(std::string_view band, Direction direction, Environment environment) const;

  /// W(NLoS) - W(LoS) in dB.
  double waste_gap_db(std::string_view band, Direction direction) const;

  /// CEF(numerator) / CEF(denominator) for one direction and environment.
  double cef_ratio(std::string_view numerator, std::string_view denominator, Direction direction,
                   Environment environment) const;
};

/// Evaluates every direction/environment combination for each base
/// scenario (their direction and environment fields are overwritten).
LinkMatrix table1_report(std::span<const LinkScenario> bases);

/// Both shipped presets.
LinkMatrix table1_report();

}  // namespace cefkit

#endif  // CEFKIT_TRANSCEIVER_HPP
