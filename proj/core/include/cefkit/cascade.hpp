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

#ifndef CEFKIT_CASCADE_HPP
#define CEFKIT_CASCADE_HPP

#include <span>
#include <string>
#include <vector>

namespace cefkit {

/// One stage on the signal path.
///
/// The waste factor W of a stage is the total signal-path power it consumes
/// (input signal plus internal DC draw) divided by the signal power it
/// delivers. A stage therefore draws `P_out * (W - 1/G)` watts of DC, which
/// is why W >= 1/G is required; equality means a passive stage. Power drawn
/// by the stage that never touches the signal (bias of an LNA treated as a
/// fixed drain, fans, ...) is kept apart as non-path power.
class Component {
 public:
  /// Throws InvalidArgument unless gain > 0 and finite, W >= max(1, 1/G)
  /// and non_path_power_w >= 0.
  Component(std::string label, double gain, double waste_factor, double non_path_power_w = 0.0);

  const std::string& label() const noexcept { return label_; }
  double gain() const noexcept { return gain_; }
  double waste_factor() const noexcept { return waste_factor_; }
  double non_path_power() const noexcept { return non_path_power_; }

  /// True when the stage draws no internal DC (W == 1/G up to rounding).
  bool is_passive() const noexcept;

 private:
  std::string label_;
  double gain_;
  double waste_factor_;
  double non_path_power_;
};

/// Attenuator, mixer, propagation channel: G = 1/loss, W = loss.
Component make_passive(double loss, std::string label = "passive");

/// Amplifier whose DC draw is P_out / efficiency. Its input signal is also
/// consumed by the stage, so W = 1/efficiency + 1/gain.
Component make_amplifier(double gain, double efficiency, std::string label = "amplifier");

/// Stage with known gain and a fixed auxiliary drain (LNA bank): W = 1,
/// the drain is carried as non-path power.
Component make_fixed_overhead(double gain, double dc_draw_w, std::string label = "fixed-overhead");

/// Power drawn off the signal path (LO, converters, screen, cooling).
struct OffPathLoad {
  std::string label;
  double power_w = 0.0;
};

/// Ordered source-to-sink list of stages fed by `source_power_w`, plus loads
/// that never carry the signal. Index 0 is closest to the source.
class Cascade {
 public:
  Cascade() = default;
  explicit Cascade(std::vector<Component> components, double source_power_w = 1e-3,
                   std::vector<OffPathLoad> off_path = {});

  std::span<const Component> components() const noexcept { return components_; }
  std::span<const OffPathLoad> off_path() const noexcept { return off_path_; }
  double source_power() const noexcept { return source_power_; }
  std::size_t size() const noexcept { return components_.size(); }
  bool empty() const noexcept { return components_.empty(); }

  Cascade with_source_power(double source_power_w) const;
  Cascade with_component(std::size_t index, Component replacement) const;
  Cascade with_off_path(std::vector<OffPathLoad> off_path) const;

 private:
  std::vector<Component> components_;
  double source_power_ = 1e-3;
  std::vector<OffPathLoad> off_path_;
};

/// Waste factor of the whole cascade referred to its output:
///   W = W_N + sum_{i<N} (W_i - 1) / prod_{j>i} G_j.
/// Throws EvaluationError on an empty cascade.
double cascade_waste_factor(const Cascade& cascade);

/// Product of the stage gains.
double cascade_gain(const Cascade& cascade);

/// Signal power delivered at the sink, watts.
double sink_signal_power(const Cascade& cascade);

/// Total consumed power: P_sig * W + all non-path power (per-stage and
/// off-path loads).
double consumed_power(const Cascade& cascade);

/// Stage-by-stage bookkeeping of the same cascade.
struct PowerLedger {
  std::vector<double> per_stage_output;  // W at the output of each stage
  std::vector<double> per_stage_dc;      // DC drawn by each stage on the signal path
  double total_signal_path = 0.0;        // source power + all per-stage DC
  double total_non_path = 0.0;
  double total_consumed = 0.0;

  /// total_signal_path / per_stage_output.back()
  double waste_factor() const;
};

/// Walks the chain charging each stage P_out * (W - 1/G) of DC and adds up
/// the source power and every draw. Shares no arithmetic with
/// cascade_waste_factor, which makes it an independent check on it.
PowerLedger bookkeeping_oracle(const Cascade& cascade);

}  // namespace cefkit

#endif  // CEFKIT_CASCADE_HPP
