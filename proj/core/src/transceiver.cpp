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

#include "cefkit/transceiver.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cefkit/error.hpp"
#include "cefkit/link_budget.hpp"

namespace cefkit {

std::string_view to_string(Role role) {
  return role == Role::BaseStation ? "bs" : "ue";
}

std::string_view to_string(Environment environment) {
  return environment == Environment::LoS ? "los" : "nlos";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::Uplink ? "ul" : "dl";
}

double BandProfile::lna_dc_per_element_w() const {
  return 1e-3 * db_to_linear(lna_gain_db) / lna_fom_per_mw;
}

const TerminalProfile& LinkScenario::transmitter() const {
  return direction == Direction::Uplink ? ue : bs;
}

const TerminalProfile& LinkScenario::receiver() const {
  return direction == Direction::Uplink ? bs : ue;
}

double LinkScenario::ple() const {
  return environment == Environment::LoS ? ple_los : ple_nlos;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void validate_terminal(const TerminalProfile& t, std::string_view name) {
  const std::string n(name);
  require(t.aperture_area_m2 > 0.0, n + ".aperture must be > 0");
  require(t.antenna_efficiency > 0.0 && t.antenna_efficiency <= 1.0,
          n + ".antenna_efficiency must be in (0, 1]");
  require(t.element_count >= 1, n + ".elements must be >= 1");
  require(t.cooling_overhead >= 0.0, n + ".cooling must be >= 0");
  require(t.screen_power_w >= 0.0, n + ".screen_power must be >= 0");
}

TerminalProfile base_station(int elements) {
  TerminalProfile bs;
  bs.role = Role::BaseStation;
  bs.aperture_area_m2 = 0.5;
  bs.antenna_efficiency = 0.6;
  bs.element_count = elements;
  bs.cooling_overhead = 0.2;
  bs.screen_power_w = 0.0;
  return bs;
}

TerminalProfile user_equipment(int elements) {
  TerminalProfile ue;
  ue.role = Role::UserEquipment;
  ue.aperture_area_m2 = 5e-4;
  ue.antenna_efficiency = 0.6;
  ue.element_count = elements;
  ue.cooling_overhead = 0.0;
  ue.screen_power_w = 0.5;
  return ue;
}

}  // namespace

void validate(const LinkScenario& s) {
  const BandProfile& b = s.band;
  require(b.carrier_frequency_hz > 0.0, "band.frequency must be > 0");
  require(b.bandwidth_hz > 0.0, "band.bandwidth must be > 0");
  require(b.pa_efficiency > 0.0 && b.pa_efficiency <= 1.0, "band.pa_efficiency must be in (0, 1]");
  require(b.lna_fom_per_mw > 0.0, "band.lna_fom must be > 0");
  require(b.mixer_loss_db >= 0.0, "band.mixer_loss must be >= 0 dB");
  require(b.phase_shifter_loss_db >= 0.0, "band.phase_shifter_loss must be >= 0 dB");
  require(b.converter_power_per_hz >= 0.0, "band.converter_power must be >= 0");
  require(std::isfinite(b.pa_gain_db) && std::isfinite(b.lna_gain_db), "band gains must be finite");
  require(std::isfinite(b.lo_power_dbm), "band.lo_power must be finite");
  validate_terminal(s.bs, "bs");
  validate_terminal(s.ue, "ue");
  require(s.distance_m >= 1.0, "link.distance must be >= 1 m");
  require(s.ple_los > 0.0 && s.ple_nlos > 0.0, "path loss exponents must be > 0");
  require(s.noise_figure_db >= 0.0, "link.noise_figure must be >= 0 dB");
  require(s.temperature_k > 0.0, "link.temperature must be > 0 K");
  require(std::isfinite(s.tx_power_dbm), "link.tx_power must be finite");
}

std::vector<std::string> preset_names() { return {"mmwave-28", "subthz-140"}; }

LinkScenario preset_scenario(std::string_view name) {
  LinkScenario s;
  if (name == "mmwave-28") {
    s.band.name = "mmwave-28";
    s.band.carrier_frequency_hz = 28e9;
    s.band.bandwidth_hz = 400e6;
    s.band.pa_efficiency = 0.28;
    s.band.lna_fom_per_mw = 24.83;
    s.band.lo_power_dbm = 10.0;
    s.bs = base_station(1024);
    s.ue = user_equipment(8);
  } else if (name == "subthz-140") {
    s.band.name = "subthz-140";
    s.band.carrier_frequency_hz = 140e9;
    s.band.bandwidth_hz = 4e9;
    s.band.pa_efficiency = 0.208;
    s.band.lna_fom_per_mw = 8.33;
    s.band.lo_power_dbm = 19.9;
    s.bs = base_station(4096);
    s.ue = user_equipment(64);
  } else {
    throw InvalidArgument("unknown preset '" + std::string(name) + "'");
  }
  return s;
}

double terminal_gain_dbi(const TerminalProfile& terminal, const LinkScenario& scenario) {
  return aperture_gain_dbi({terminal.aperture_area_m2, terminal.antenna_efficiency},
                           scenario.band.carrier_frequency_hz, scenario.speed_of_light);
}

double path_loss_db(const LinkScenario& scenario) {
  return path_loss_ci_db({scenario.band.carrier_frequency_hz, scenario.distance_m, scenario.ple(), 1.0},
                         scenario.speed_of_light);
}

double noise_power_dbm(const LinkScenario& scenario) {
  return noise_power_dbm(
      NoiseSpec{scenario.band.bandwidth_hz, scenario.noise_figure_db, scenario.temperature_k});
}

double required_tx_power_dbm(const LinkScenario& scenario, double snr_db) {
  return snr_db + noise_power_dbm(scenario) - terminal_gain_dbi(scenario.transmitter(), scenario) -
         terminal_gain_dbi(scenario.receiver(), scenario) + path_loss_db(scenario);
}

Cascade transmit_section(const BandProfile& band, const TerminalProfile& terminal,
                         double tx_power_dbm) {
  std::vector<Component> stages;
  stages.push_back(make_passive(db_to_linear(band.mixer_loss_db), "tx mixer"));
  stages.push_back(make_passive(db_to_linear(band.phase_shifter_loss_db), "tx phase shifters"));
  stages.push_back(make_amplifier(db_to_linear(band.pa_gain_db), band.pa_efficiency, "pa bank"));

  const double bank_output_w = terminal.element_count * dbm_to_watts(tx_power_dbm);
  const double section_gain_db = band.pa_gain_db - band.phase_shifter_loss_db - band.mixer_loss_db;
  return Cascade(std::move(stages), bank_output_w / db_to_linear(section_gain_db));
}

Component lna_bank(const BandProfile& band, const TerminalProfile& terminal) {
  return make_fixed_overhead(db_to_linear(band.lna_gain_db),
                             terminal.element_count * band.lna_dc_per_element_w(), "lna bank");
}

double terminal_overhead_w(const BandProfile& band, const TerminalProfile& terminal) {
  return dbm_to_watts(band.lo_power_dbm) + band.converter_power_per_hz * band.bandwidth_hz +
         terminal.screen_power_w;
}

LinkChain build_chain(const LinkScenario& s) {
  validate(s);
  const TerminalProfile& tx = s.transmitter();
  const TerminalProfile& rx = s.receiver();
  const std::string tx_name(to_string(tx.role));
  const std::string rx_name(to_string(rx.role));

  LinkChain chain;
  chain.path_loss_db = path_loss_db(s);
  chain.tx_gain_dbi = terminal_gain_dbi(tx, s);
  chain.rx_gain_dbi = terminal_gain_dbi(rx, s);

  const Cascade tx_section = transmit_section(s.band, tx, s.tx_power_dbm);

  // The air link maps the aggregate bank output onto the received power of
  // the per-element link budget.
  const double air_loss_db = chain.path_loss_db - chain.tx_gain_dbi - chain.rx_gain_dbi +
                             linear_to_db(static_cast<double>(tx.element_count));
  if (air_loss_db < 0.0) {
    throw EvaluationError("over-the-air stage has net gain (" + std::to_string(-air_loss_db) +
                          " dB); distance is too short for the far-field link model");
  }

  std::vector<Component> stages(tx_section.components().begin(), tx_section.components().end());
  chain.stage_side.assign(stages.size(), Side::Transmitter);

  chain.channel_index = stages.size();
  stages.push_back(make_passive(db_to_linear(air_loss_db), "air link"));
  chain.stage_side.push_back(Side::Channel);

  const std::size_t rx_begin = stages.size();
  stages.push_back(lna_bank(s.band, rx));
  stages.push_back(make_passive(db_to_linear(s.band.phase_shifter_loss_db), "rx phase shifters"));
  stages.push_back(make_passive(db_to_linear(s.band.mixer_loss_db), "rx mixer"));
  chain.stage_side.resize(stages.size(), Side::Receiver);

  // Signal-path draw of each terminal, from the waste factor of its own
  // section (P_out * W counts the section input too).
  const double tx_out = sink_signal_power(tx_section);
  const double tx_signal_path = tx_out * cascade_waste_factor(tx_section);

  const double rx_in = tx_out * stages[chain.channel_index].gain();
  const Cascade rx_section(std::vector<Component>(stages.begin() + rx_begin, stages.end()), rx_in);
  const double rx_signal_path =
      sink_signal_power(rx_section) * cascade_waste_factor(rx_section) - rx_in;

  const double tx_non_path = terminal_overhead_w(s.band, tx);
  const double rx_non_path = terminal_overhead_w(s.band, rx) + stages[rx_begin].non_path_power();

  std::vector<OffPathLoad> loads;
  loads.push_back({tx_name + " lo", dbm_to_watts(s.band.lo_power_dbm)});
  loads.push_back({tx_name + " converter", s.band.converter_power_per_hz * s.band.bandwidth_hz});
  loads.push_back({rx_name + " lo", dbm_to_watts(s.band.lo_power_dbm)});
  loads.push_back({rx_name + " converter", s.band.converter_power_per_hz * s.band.bandwidth_hz});
  if (tx.screen_power_w > 0.0) loads.push_back({tx_name + " screen", tx.screen_power_w});
  if (rx.screen_power_w > 0.0) loads.push_back({rx_name + " screen", rx.screen_power_w});
  if (tx.cooling_overhead > 0.0) {
    loads.push_back({tx_name + " cooling", tx.cooling_overhead * (tx_signal_path + tx_non_path)});
  }
  if (rx.cooling_overhead > 0.0) {
    loads.push_back({rx_name + " cooling", rx.cooling_overhead * (rx_signal_path + rx_non_path)});
  }

  chain.cascade = Cascade(std::move(stages), tx_section.source_power(), std::move(loads));
  return chain;
}

Cascade replace_channel(const LinkChain& chain, Component replacement) {
  return chain.cascade.with_component(chain.channel_index, std::move(replacement));
}

LinkReport evaluate_link(const LinkScenario& s) {
  const LinkChain chain = build_chain(s);

  LinkReport r;
  const double waste = cascade_waste_factor(chain.cascade);
  r.waste_figure_db = linear_to_db(waste);
  r.cascade_gain_db = linear_to_db(cascade_gain(chain.cascade));

  const double pr_dbm =
      received_power_dbm(s.tx_power_dbm, chain.tx_gain_dbi, chain.rx_gain_dbi, chain.path_loss_db);
  r.p_received_dbw = dbm_to_dbw(pr_dbm);
  r.snr_db = pr_dbm - noise_power_dbm(s);
  r.rate_bps = shannon_rate_bps(s.band.bandwidth_hz, r.snr_db);
  r.p_consumed_w = consumed_power(chain.cascade);
  r.cef_bpj = consumption_efficiency(r.rate_bps, r.p_consumed_w);

  r.fspl_1m_db = fspl_1m_db(s.band.carrier_frequency_hz, s.speed_of_light);
  r.path_loss_db = chain.path_loss_db;
  r.eirp_dbm = s.tx_power_dbm + chain.tx_gain_dbi;
  return r;
}

const LinkReport& LinkMatrix::at(std::string_view band, Direction direction,
                                 Environment environment) const {
  for (const auto& cell : cells) {
    if (cell.band == band && cell.direction == direction && cell.environment == environment) {
      return cell.report;
    }
  }
  throw InvalidArgument("no link matrix cell for band '" + std::string(band) + "'");
}

double LinkMatrix::waste_gap_db(std::string_view band, Direction direction) const {
  return at(band, direction, Environment::NLoS).waste_figure_db -
         at(band, direction, Environment::LoS).waste_figure_db;
}

double LinkMatrix::cef_ratio(std::string_view numerator, std::string_view denominator,
                             Direction direction, Environment environment) const {
  return at(numerator, direction, environment).cef_bpj /
         at(denominator, direction, environment).cef_bpj;
}

LinkMatrix table1_report(std::span<const LinkScenario> bases) {
  LinkMatrix matrix;
  for (const auto& base : bases) {
    matrix.bands.push_back(base.band.name);
    for (Direction d : {Direction::Uplink, Direction::Downlink}) {
      for (Environment e : {Environment::LoS, Environment::NLoS}) {
        LinkScenario s = base;
        s.direction = d;
        s.environment = e;
        matrix.cells.push_back({base.band.name, d, e, evaluate_link(s)});
      }
    }
  }
  return matrix;
}

LinkMatrix table1_report() {
  std::vector<LinkScenario> bases;
  for (const auto& name : preset_names()) bases.push_back(preset_scenario(name));
  return table1_report(bases);
}

}  // namespace cefkit
