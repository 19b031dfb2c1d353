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

#include "cefkit/cascade.hpp"

#include <cmath>
#include <utility>

#include "cefkit/error.hpp"

namespace cefkit {
namespace {

// Passive stages are built as W = L, G = 1/L; 1/G then differs from W by a
// few ulps.
constexpr double kPassiveRelTol = 1e-12;

}  // namespace

Component::Component(std::string label, double gain, double waste_factor, double non_path_power_w)
    : label_(std::move(label)),
      gain_(gain),
      waste_factor_(waste_factor),
      non_path_power_(non_path_power_w) {
  if (!std::isfinite(gain_) || gain_ <= 0.0) {
    throw InvalidArgument("component '" + label_ + "': gain must be finite and > 0");
  }
  if (!std::isfinite(waste_factor_) || waste_factor_ < 1.0) {
    throw InvalidArgument("component '" + label_ + "': waste factor must be >= 1");
  }
  if (waste_factor_ < (1.0 / gain_) * (1.0 - kPassiveRelTol)) {
    throw InvalidArgument("component '" + label_ +
                          "': waste factor below 1/gain implies negative DC draw");
  }
  if (!std::isfinite(non_path_power_) || non_path_power_ < 0.0) {
    throw InvalidArgument("component '" + label_ + "': non-path power must be >= 0");
  }
}

bool Component::is_passive() const noexcept {
  return std::abs(waste_factor_ * gain_ - 1.0) <= kPassiveRelTol;
}

Component make_passive(double loss, std::string label) {
  if (!std::isfinite(loss) || loss < 1.0) {
    throw InvalidArgument("passive '" + label + "': loss must be >= 1 (got " +
                          std::to_string(loss) + ")");
  }
  return Component(std::move(label), 1.0 / loss, loss);
}

Component make_amplifier(double gain, double efficiency, std::string label) {
  if (!(efficiency > 0.0) || efficiency > 1.0) {
    throw InvalidArgument("amplifier '" + label + "': efficiency must be in (0, 1]");
  }
  if (!std::isfinite(gain) || gain <= 0.0) {
    throw InvalidArgument("amplifier '" + label + "': gain must be finite and > 0");
  }
  return Component(std::move(label), gain, 1.0 / efficiency + 1.0 / gain);
}

Component make_fixed_overhead(double gain, double dc_draw_w, std::string label) {
  if (!std::isfinite(dc_draw_w) || dc_draw_w < 0.0) {
    throw InvalidArgument("fixed-overhead '" + label + "': DC draw must be >= 0");
  }
  return Component(std::move(label), gain, 1.0, dc_draw_w);
}

Cascade::Cascade(std::vector<Component> components, double source_power_w,
                 std::vector<OffPathLoad> off_path)
    : components_(std::move(components)),
      source_power_(source_power_w),
      off_path_(std::move(off_path)) {
  if (!std::isfinite(source_power_) || source_power_ <= 0.0) {
    throw InvalidArgument("cascade source power must be > 0");
  }
  for (const auto& load : off_path_) {
    if (!std::isfinite(load.power_w) || load.power_w < 0.0) {
      throw InvalidArgument("off-path load '" + load.label + "' must be >= 0 W");
    }
  }
}

Cascade Cascade::with_source_power(double source_power_w) const {
  return Cascade(components_, source_power_w, off_path_);
}

Cascade Cascade::with_component(std::size_t index, Component replacement) const {
  if (index >= components_.size()) throw InvalidArgument("component index out of range");
  auto copy = components_;
  copy[index] = std::move(replacement);
  return Cascade(std::move(copy), source_power_, off_path_);
}

Cascade Cascade::with_off_path(std::vector<OffPathLoad> off_path) const {
  return Cascade(components_, source_power_, std::move(off_path));
}

double cascade_waste_factor(const Cascade& cascade) {
  const auto stages = cascade.components();
  if (stages.empty()) throw EvaluationError("waste factor of an empty cascade");

  // Walk back from the sink, accumulating the gain that follows stage i.
  double waste = stages.back().waste_factor();
  double downstream_gain = 1.0;
  for (std::size_t i = stages.size() - 1; i-- > 0;) {
    downstream_gain *= stages[i + 1].gain();
    waste += (stages[i].waste_factor() - 1.0) / downstream_gain;
  }
  return waste;
}

double cascade_gain(const Cascade& cascade) {
  if (cascade.empty()) throw EvaluationError("gain of an empty cascade");
  double gain = 1.0;
  for (const auto& c : cascade.components()) gain *= c.gain();
  return gain;
}

double sink_signal_power(const Cascade& cascade) {
  return cascade.source_power() * cascade_gain(cascade);
}

double consumed_power(const Cascade& cascade) {
  double non_path = 0.0;
  for (const auto& c : cascade.components()) non_path += c.non_path_power();
  for (const auto& load : cascade.off_path()) non_path += load.power_w;
  return sink_signal_power(cascade) * cascade_waste_factor(cascade) + non_path;
}

double PowerLedger::waste_factor() const {
  if (per_stage_output.empty()) throw EvaluationError("empty power ledger");
  return total_signal_path / per_stage_output.back();
}

PowerLedger bookkeeping_oracle(const Cascade& cascade) {
  if (cascade.empty()) throw EvaluationError("bookkeeping of an empty cascade");

  PowerLedger ledger;
  ledger.per_stage_output.reserve(cascade.size());
  ledger.per_stage_dc.reserve(cascade.size());

  double signal = cascade.source_power();
  ledger.total_signal_path = signal;
  for (const auto& c : cascade.components()) {
    const double out = signal * c.gain();
    const double dc = out * c.waste_factor() - signal;  // P_out * (W - 1/G)
    ledger.per_stage_output.push_back(out);
    ledger.per_stage_dc.push_back(dc);
    ledger.total_signal_path += dc;
    ledger.total_non_path += c.non_path_power();
    signal = out;
  }
  for (const auto& load : cascade.off_path()) ledger.total_non_path += load.power_w;
  ledger.total_consumed = ledger.total_signal_path + ledger.total_non_path;
  return ledger;
}

}  // namespace cefkit
