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


#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cefkit/chain_dsl.hpp"
#include "cefkit/csv.hpp"
#include "cefkit/error.hpp"
#include "cefkit/netsim.hpp"
#include "cefkit/quantity.hpp"
#include "cefkit/scenario_io.hpp"
#include "cefkit/sweeps.hpp"
#include "cefkit/transceiver.hpp"

namespace {

using namespace cefkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitEvaluation = 3;

struct Common {
  std::string scenario_file;
  std::string preset;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_preset) {
  c.preset = default_preset;
  cmd->add_option("--scenario", c.scenario_file, "Scenario file (.scn)");
  cmd->add_option("--preset", c.preset, "Band preset or preset file name")->capture_default_str();
  cmd->add_option("--set", c.sets, "Override, section.key=value (repeatable)");
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--out", c.out, "Write CSV output to this file");
  cmd->add_option("--threads", c.threads, "Worker threads (0: all cores)");
}

ScenarioDocument scenario_for(const Common& c, const std::string& preset) {
  std::vector<std::string> sets = c.sets;
  if (c.seed) sets.push_back("network.seed=" + std::to_string(*c.seed));
  if (!c.scenario_file.empty()) return load_scenario_file(c.scenario_file, sets);
  return parse_scenario("preset = \"" + preset + "\"\n", sets);
}

ScenarioDocument scenario_for(const Common& c) { return scenario_for(c, c.preset); }

Direction parse_direction(const std::string& s) {
  if (s == "ul") return Direction::Uplink;
  if (s == "dl") return Direction::Downlink;
  throw CLI::ValidationError("--direction", "expected ul or dl");
}

Environment parse_environment(const std::string& s) {
  if (s == "los") return Environment::LoS;
  if (s == "nlos") return Environment::NLoS;
  throw CLI::ValidationError("--env", "expected los or nlos");
}

// Writes to --out when given, otherwise to stdout.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + path + "'");
  write(file);
  if (!file) throw InvalidArgument("error writing '" + path + "'");
}

double quantity_arg(const std::string& text, QuantityKind kind, const std::string& option) {
  try {
    return parse_quantity(text, kind);
  } catch (const QuantityError& e) {
    throw CLI::ValidationError(option, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waste-factor and consumption-efficiency analysis of wireless links and networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cefkit 0.1.0");

  // link
  Common link_opts;
  std::string link_direction;
  std::string link_env;
  auto* link_cmd = app.add_subcommand("link", "Evaluate one link");
  add_common(link_cmd, link_opts, "mmwave-28");
  link_cmd->add_option("--direction", link_direction, "ul or dl");
  link_cmd->add_option("--env", link_env, "los or nlos");

  // table1
  Common table_opts;
  auto* table_cmd = app.add_subcommand("table1", "Band x direction x environment matrix");
  add_common(table_cmd, table_opts, "both");

  // sweep-bw
  Common bw_opts;
  std::string bw_direction = "dl";
  std::string bw_env = "los";
  std::optional<double> bw_snr;
  std::string bw_lo = "100MHz";
  std::string bw_hi = "8GHz";
  int bw_points = 64;
  std::string bw_reference = "mmwave-28";
  auto* bw_cmd = app.add_subcommand("sweep-bw", "CEF versus bandwidth");
  add_common(bw_cmd, bw_opts, "subthz-140");
  bw_cmd->add_option("--direction", bw_direction, "ul or dl")->capture_default_str();
  bw_cmd->add_option("--env", bw_env, "los or nlos")->capture_default_str();
  bw_cmd->add_option("--snr", bw_snr, "Hold this SNR (dB) by solving the drive per sample");
  bw_cmd->add_option("--lo", bw_lo, "Lowest bandwidth")->capture_default_str();
  bw_cmd->add_option("--hi", bw_hi, "Highest bandwidth")->capture_default_str();
  bw_cmd->add_option("--points", bw_points, "Grid size")->capture_default_str();
  bw_cmd->add_option("--reference", bw_reference,
                     "Preset whose CEF at its own bandwidth marks the crossover ('none' to skip)")
      ->capture_default_str();

  // sweep-pa
  Common pa_opts;
  std::string pa_direction = "dl";
  std::string pa_env = "los";
  std::optional<double> pa_snr;
  double pa_lo = 0.01;
  double pa_hi = 1.0;
  int pa_points = 64;
  std::string pa_reference = "mmwave-28";
  double pa_reference_eta = 0.2;
  auto* pa_cmd = app.add_subcommand("sweep-pa", "CEF versus PA efficiency");
  add_common(pa_cmd, pa_opts, "subthz-140");
  pa_cmd->add_option("--direction", pa_direction, "ul or dl")->capture_default_str();
  pa_cmd->add_option("--env", pa_env, "los or nlos")->capture_default_str();
  pa_cmd->add_option("--snr", pa_snr, "Hold this SNR (dB) by solving the drive per sample");
  pa_cmd->add_option("--lo", pa_lo, "Lowest efficiency")->capture_default_str();
  pa_cmd->add_option("--hi", pa_hi, "Highest efficiency")->capture_default_str();
  pa_cmd->add_option("--points", pa_points, "Grid size")->capture_default_str();
  pa_cmd->add_option("--reference", pa_reference, "Preset giving the target CEF ('none' to skip)")
      ->capture_default_str();
  pa_cmd->add_option("--reference-eta", pa_reference_eta, "PA efficiency of the reference")
      ->capture_default_str();

  // netsim
  Common net_opts;
  std::vector<std::string> net_radii;
  std::optional<int> net_drops;
  bool net_no_ici = false;
  bool net_wrap = false;
  auto* net_cmd = app.add_subcommand("netsim", "Hexagonal network CEF versus cell radius");
  add_common(net_cmd, net_opts, "subthz-140");
  net_cmd->add_option("--radius", net_radii, "Cell radii, e.g. 65m (default: reference study)");
  net_cmd->add_option("--drops", net_drops, "Monte-Carlo drops per radius");
  net_cmd->add_flag("--no-interference", net_no_ici, "Disable inter-cell interference");
  net_cmd->add_flag("--wrap-around", net_wrap, "Toroidal distances at the area edge");

  // chain
  Common chain_opts;
  std::string chain_file;
  auto* chain_cmd = app.add_subcommand("chain", "Evaluate a chain description file");
  add_common(chain_cmd, chain_opts, "");
  chain_cmd->add_option("file", chain_file, "Chain file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*link_cmd) {
      ScenarioDocument doc = scenario_for(link_opts);
      if (!link_direction.empty()) doc.link.direction = parse_direction(link_direction);
      if (!link_env.empty()) doc.link.environment = parse_environment(link_env);
      const LinkReport r = evaluate_link(doc.link);
      write_link_report(std::cout, doc.link, r);
      if (!link_opts.out.empty()) {
        emit(link_opts.out, [&](std::ostream& os) {
          LinkMatrix single;
          single.bands.push_back(doc.link.band.name);
          single.cells.push_back({doc.link.band.name, doc.link.direction, doc.link.environment, r});
          write_link_matrix_csv(os, single);
        });
      }
    } else if (*table_cmd) {
      std::vector<LinkScenario> bases;
      if (table_opts.preset == "both" && table_opts.scenario_file.empty()) {
        for (const auto& name : preset_names()) bases.push_back(scenario_for(table_opts, name).link);
      } else {
        bases.push_back(scenario_for(table_opts).link);
      }
      const LinkMatrix matrix = table1_report(bases);
      write_link_matrix_text(std::cout, matrix);
      if (table_opts.out.empty()) std::cout << '\n';
      emit(table_opts.out, [&](std::ostream& os) { write_link_matrix_csv(os, matrix); });
    } else if (*bw_cmd || *pa_cmd) {
      const bool bandwidth = static_cast<bool>(*bw_cmd);
      Common& opts = bandwidth ? bw_opts : pa_opts;
      const Direction direction = parse_direction(bandwidth ? bw_direction : pa_direction);
      const Environment environment = parse_environment(bandwidth ? bw_env : pa_env);
      const std::optional<double> snr = bandwidth ? bw_snr : pa_snr;
      const std::string& reference = bandwidth ? bw_reference : pa_reference;

      SweepSpec spec;
      spec.scenario = scenario_for(opts).link;
      spec.scenario.direction = direction;
      spec.scenario.environment = environment;
      spec.snr_target_db = snr;
      spec.threads = opts.threads;
      if (bandwidth) {
        spec.parameter = SweepParameter::Bandwidth;
        spec.lo = quantity_arg(bw_lo, QuantityKind::Frequency, "--lo");
        spec.hi = quantity_arg(bw_hi, QuantityKind::Frequency, "--hi");
        spec.points = bw_points;
      } else {
        spec.parameter = SweepParameter::PaEfficiency;
        spec.lo = pa_lo;
        spec.hi = pa_hi;
        spec.points = pa_points;
      }
      const Curve curve = sweep(spec);

      std::optional<Crossover> crossover;
      if (reference != "none") {
        LinkScenario ref = scenario_for(opts, reference).link;
        ref.direction = direction;
        ref.environment = environment;
        if (!bandwidth) ref.band.pa_efficiency = pa_reference_eta;
        if (snr) ref.tx_power_dbm = required_tx_power_dbm(ref, *snr);
        const double ref_cef = evaluate_link(ref).cef_bpj;
        crossover = find_crossover(spec, curve, ref_cef);
        std::cerr << "reference " << reference << " CEF " << ref_cef / 1e9 << " Gb/J; ";
        if (crossover->found) {
          std::cerr << "crossover at " << format_number(crossover->x) << ' '
                    << unit_of(spec.parameter) << '\n';
        } else {
          std::cerr << "no crossover in range\n";
        }
        if (!bandwidth && !snr) {
          const EfficiencyMatch m = min_matching_efficiency(ref_cef, spec.scenario);
          if (m.achievable) {
            std::cerr << "minimum matching efficiency " << format_number(m.efficiency) << '\n';
          } else {
            std::cerr << "reference CEF not reachable at efficiency 1\n";
          }
        }
      }
      emit(opts.out, [&](std::ostream& os) { write_curve_csv(os, spec, curve, crossover); });
    } else if (*net_cmd) {
      ScenarioDocument doc = scenario_for(net_opts);
      NetworkScenario s = doc.network;
      if (net_drops) s.drops = *net_drops;
      if (net_no_ici) s.interference = false;
      if (net_wrap) s.wrap_around = true;
      s.threads = net_opts.threads;
      std::vector<double> radii = default_radii();
      if (!net_radii.empty()) {
        radii.clear();
        for (const auto& r : net_radii) radii.push_back(quantity_arg(r, QuantityKind::Length, "--radius"));
      }
      const RadiusSweep result = sweep_radius(s, radii);
      emit(net_opts.out, [&](std::ostream& os) { write_radius_csv(os, result); });
      std::cerr << "best radius " << format_number(result.argmax_radius_m) << " m\n";
    } else if (*chain_cmd) {
      const ParsedChain chain = load_chain_file(chain_file);
      write_cascade_report(std::cout, chain.cascade);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitEvaluation;
  }
  return kExitOk;
}
