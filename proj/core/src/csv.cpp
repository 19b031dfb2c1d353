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


#include "cefkit/csv.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <string>
#include <vector>

#include "cefkit/units.hpp"

namespace cefkit {
namespace {

std::string num(double v) { return fmt::format("{:.10g}", v); }

void curve_row(std::ostream& out, std::string_view unit, const CurvePoint& p,
               std::string_view flag) {
  out << num(p.x) << ',' << unit << ',' << num(p.cef_bpj / 1e9) << ',' << num(p.rate_bps / 1e9)
      << ',' << num(p.p_consumed_w) << ',' << num(p.snr_db) << ',' << flag << '\n';
}

}  // namespace

void write_curve_csv(std::ostream& out, const SweepSpec& spec, const Curve& curve,
                     const std::optional<Crossover>& crossover) {
  const std::string_view unit = unit_of(curve.parameter);
  out << "x_value,unit,cef_gbpj,rate_gbps,p_consumed_w,snr_db,feasible\n";
  const bool mark = crossover && crossover->found;
  bool marked = false;
  for (const auto& p : curve.points) {
    if (mark && !marked && p.x >= crossover->x) {
      curve_row(out, unit, evaluate_sample(spec, crossover->x), "crossover");
      marked = true;
    }
    curve_row(out, unit, p, p.feasible ? "true" : "false");
  }
  if (mark && !marked) curve_row(out, unit, evaluate_sample(spec, crossover->x), "crossover");
}

void write_link_matrix_csv(std::ostream& out, const LinkMatrix& matrix) {
  out << "band,direction,environment,fspl_1m_db,pr_dbw,waste_figure_db,gain_db,snr_db,rate_gbps,"
         "pc_w,cef_gbpj\n";
  for (const auto& c : matrix.cells) {
    const LinkReport& r = c.report;
    out << c.band << ',' << to_string(c.direction) << ',' << to_string(c.environment) << ','
        << num(r.fspl_1m_db) << ',' << num(r.p_received_dbw) << ',' << num(r.waste_figure_db) << ','
        << num(r.cascade_gain_db) << ',' << num(r.snr_db) << ',' << num(r.rate_bps / 1e9) << ','
        << num(r.p_consumed_w) << ',' << num(r.cef_bpj / 1e9) << '\n';
  }
}

void write_link_matrix_text(std::ostream& out, const LinkMatrix& matrix) {
  struct Row {
    const char* label;
    double (*get)(const LinkReport&);
    const char* spec;
  };
  static const Row rows[] = {
      {"FSPL (1 m) [dB]", [](const LinkReport& r) { return r.fspl_1m_db; }, "{:>12.1f}"},
      {"Path loss [dB]", [](const LinkReport& r) { return r.path_loss_db; }, "{:>12.1f}"},
      {"P_r [dBW]", [](const LinkReport& r) { return r.p_received_dbw; }, "{:>12.1f}"},
      {"SNR [dB]", [](const LinkReport& r) { return r.snr_db; }, "{:>12.1f}"},
      {"Waste figure [dB]", [](const LinkReport& r) { return r.waste_figure_db; }, "{:>12.1f}"},
      {"Rate [Gb/s]", [](const LinkReport& r) { return r.rate_bps / 1e9; }, "{:>12.2f}"},
      {"P_c [W]", [](const LinkReport& r) { return r.p_consumed_w; }, "{:>12.2f}"},
      {"CEF [Gb/J]", [](const LinkReport& r) { return r.cef_bpj / 1e9; }, "{:>12.3f}"},
  };
  const Direction dirs[] = {Direction::Uplink, Direction::Downlink};
  const Environment envs[] = {Environment::LoS, Environment::NLoS};
  bool first = true;
  for (const auto& band : matrix.bands) {
    if (!first) out << '\n';
    first = false;
    out << fmt::format("{:<20}{:>12}{:>12}{:>12}{:>12}\n", band, "UL LoS", "UL NLoS", "DL LoS",
                       "DL NLoS");
    for (const auto& row : rows) {
      out << fmt::format("{:<20}", row.label);
      for (Direction d : dirs) {
        for (Environment e : envs) {
          out << fmt::format(fmt::runtime(row.spec), row.get(matrix.at(band, d, e)));
        }
      }
      out << '\n';
    }
  }
}

void write_radius_csv(std::ostream& out, const RadiusSweep& sweep) {
  out << "radius_m,cells,cef_gbpj,throughput_gbps,power_w,mean_sinr_db,los_fraction,ci_halfwidth\n";
  for (const auto& r : sweep.reports) {
    out << num(r.radius_m) << ',' << r.cells << ',' << num(r.network_cef_bpj / 1e9) << ','
        << num(r.total_throughput_bps / 1e9) << ',' << num(r.total_power_w) << ','
        << num(r.sinr.mean_db) << ',' << num(r.los_fraction) << ','
        << num(r.ci_halfwidth_bpj / 1e9) << '\n';
  }
}

void write_link_report(std::ostream& out, const LinkScenario& s, const LinkReport& r) {
  out << fmt::format("band               {}\n", s.band.name);
  out << fmt::format("direction          {}\n", to_string(s.direction));
  out << fmt::format("environment        {}\n", to_string(s.environment));
  out << fmt::format("distance           {} m\n", num(s.distance_m));
  out << fmt::format("fspl_1m            {:.2f} dB\n", r.fspl_1m_db);
  out << fmt::format("path_loss          {:.2f} dB\n", r.path_loss_db);
  out << fmt::format("eirp               {:.2f} dBm\n", r.eirp_dbm);
  out << fmt::format("p_received         {:.2f} dBW\n", r.p_received_dbw);
  out << fmt::format("snr                {:.2f} dB\n", r.snr_db);
  out << fmt::format("waste_figure       {:.2f} dB\n", r.waste_figure_db);
  out << fmt::format("cascade_gain       {:.2f} dB\n", r.cascade_gain_db);
  out << fmt::format("rate               {:.4f} Gb/s\n", r.rate_bps / 1e9);
  out << fmt::format("p_consumed         {:.4f} W\n", r.p_consumed_w);
  out << fmt::format("cef                {:.4f} Gb/J\n", r.cef_bpj / 1e9);
}

void write_cascade_report(std::ostream& out, const Cascade& cascade) {
  out << fmt::format("{:<4}{:<24}{:>12}{:>12}{:>14}\n", "#", "stage", "gain_db", "waste_db",
                     "non_path_w");
  std::size_t i = 0;
  for (const auto& c : cascade.components()) {
    out << fmt::format("{:<4}{:<24}{:>12.3f}{:>12.3f}{:>14.6g}\n", i++, c.label(),
                       linear_to_db(c.gain()), linear_to_db(c.waste_factor()), c.non_path_power());
  }
  for (const auto& load : cascade.off_path()) {
    out << fmt::format("    {:<24}{:>12}{:>12}{:>14.6g}\n", load.label, "-", "-", load.power_w);
  }
  out << fmt::format("source_power       {} W\n", num(cascade.source_power()));
  out << fmt::format("output_power       {} W\n", num(sink_signal_power(cascade)));
  out << fmt::format("cascade_gain       {:.4f} dB\n", linear_to_db(cascade_gain(cascade)));
  out << fmt::format("waste_figure       {:.4f} dB\n", linear_to_db(cascade_waste_factor(cascade)));
  out << fmt::format("p_consumed         {} W\n", num(consumed_power(cascade)));
}

}  // namespace cefkit
