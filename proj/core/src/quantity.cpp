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


#include "cefkit/quantity.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <string>
#include <utility>
#include <vector>

#include "cefkit/units.hpp"

namespace cefkit {
namespace {

struct UnitRule {
  std::string_view unit;
  double (*convert)(double);
};

double identity(double v) { return v; }
double times_1e3(double v) { return v * 1e3; }
double times_1e6(double v) { return v * 1e6; }
double times_1e9(double v) { return v * 1e9; }
double times_1e12(double v) { return v * 1e12; }
double times_1e_2(double v) { return v * 1e-2; }
double times_1e_3(double v) { return v * 1e-3; }
double times_1e_4(double v) { return v * 1e-4; }
double times_1e_6(double v) { return v * 1e-6; }
double times_1e_9(double v) { return v * 1e-9; }
double times_1e_12(double v) { return v * 1e-12; }
double dbw_to_dbm_rule(double v) { return dbw_to_dbm(v); }
double dbm_to_w_rule(double v) { return dbm_to_watts(v); }
double dbw_to_w_rule(double v) { return dbw_to_watts(v); }

double watts_to_dbm_checked(double w) {
  if (!(w > 0.0)) throw QuantityError(0, "power must be > 0 to express in dBm");
  return watts_to_dbm(w);
}
double mw_to_dbm(double v) { return watts_to_dbm_checked(v * 1e-3); }
double uw_to_dbm(double v) { return watts_to_dbm_checked(v * 1e-6); }

const std::vector<UnitRule>& rules(QuantityKind kind) {
  static const std::vector<UnitRule> frequency{
      {"Hz", identity}, {"kHz", times_1e3}, {"MHz", times_1e6}, {"GHz", times_1e9},
      {"THz", times_1e12}};
  static const std::vector<UnitRule> length{
      {"m", identity}, {"cm", times_1e_2}, {"mm", times_1e_3}, {"km", times_1e3}};
  static const std::vector<UnitRule> area{
      {"m2", identity}, {"cm2", times_1e_4}, {"mm2", times_1e_6}, {"km2", times_1e6}};
  static const std::vector<UnitRule> decibel{{"dB", identity}};
  static const std::vector<UnitRule> gain{{"dBi", identity}, {"dB", identity}};
  static const std::vector<UnitRule> power_dbm{{"dBm", identity},
                                               {"dBW", dbw_to_dbm_rule},
                                               {"W", watts_to_dbm_checked},
                                               {"mW", mw_to_dbm},
                                               {"uW", uw_to_dbm}};
  static const std::vector<UnitRule> power_watts{
      {"W", identity},   {"mW", times_1e_3},     {"uW", times_1e_6},
      {"kW", times_1e3}, {"dBm", dbm_to_w_rule}, {"dBW", dbw_to_w_rule}};
  static const std::vector<UnitRule> fraction{{"", identity}, {"%", times_1e_2}};
  static const std::vector<UnitRule> bare{{"", identity}};
  static const std::vector<UnitRule> per_mw{{"/mW", identity}, {"1/mW", identity},
                                            {"mW^-1", identity}};
  static const std::vector<UnitRule> per_hz{
      {"W/Hz", identity}, {"mW/GHz", times_1e_12}, {"mW/MHz", times_1e_9}, {"pW/Hz", times_1e_12}};
  static const std::vector<UnitRule> temperature{{"K", identity}};

  switch (kind) {
    case QuantityKind::Frequency: return frequency;
    case QuantityKind::Length: return length;
    case QuantityKind::Area: return area;
    case QuantityKind::Decibel: return decibel;
    case QuantityKind::Gain: return gain;
    case QuantityKind::PowerDbm: return power_dbm;
    case QuantityKind::PowerWatts: return power_watts;
    case QuantityKind::Fraction: return fraction;
    case QuantityKind::Real:
    case QuantityKind::Count: return bare;
    case QuantityKind::PerMilliwatt: return per_mw;
    case QuantityKind::PowerPerHertz: return per_hz;
    case QuantityKind::Temperature: return temperature;
  }
  return bare;
}

}  // namespace

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string accepted_units(QuantityKind kind) {
  std::string out;
  for (const auto& r : rules(kind)) {
    if (!out.empty()) out += ", ";
    out += r.unit.empty() ? std::string("(none)") : std::string(r.unit);
  }
  return out;
}

double parse_quantity(std::string_view text, QuantityKind kind) {
  const std::string_view body = trim(text);
  if (body.empty()) throw QuantityError(0, "missing value");
  const std::size_t lead = text.find_first_not_of(" \t\r");

  double number = 0.0;
  const char* begin = body.data();
  const char* end = body.data() + body.size();
  auto [ptr, ec] = std::from_chars(begin, end, number);
  if (ec != std::errc() || ptr == begin) throw QuantityError(lead, "expected a number");
  if (!std::isfinite(number)) throw QuantityError(lead, "number must be finite");

  const auto unit_offset = static_cast<std::size_t>(ptr - begin);
  const std::string_view rest = body.substr(unit_offset);
  const std::string_view unit = trim(rest);
  const std::size_t unit_col = lead + unit_offset + (unit.empty() ? 0 : rest.find(unit.front()));

  if (kind == QuantityKind::Count && (number != std::floor(number) || std::abs(number) > 1e15)) {
    throw QuantityError(lead, "expected an integer count");
  }
  for (const auto& r : rules(kind)) {
    if (r.unit == unit) {
      try {
        return r.convert(number);
      } catch (const QuantityError& e) {
        throw QuantityError(lead, e.what());
      }
    }
  }
  if (unit.empty()) {
    throw QuantityError(unit_col, "missing unit (expected one of: " + accepted_units(kind) + ")");
  }
  throw QuantityError(unit_col, "unit '" + std::string(unit) + "' not accepted here (expected one of: " +
                                    accepted_units(kind) + ")");
}

std::string_view canonical_unit(QuantityKind kind) { return rules(kind).front().unit; }

std::string format_number(double value) { return fmt::format("{}", value); }

}  // namespace cefkit
