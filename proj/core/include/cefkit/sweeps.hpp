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


#ifndef CEFKIT_SWEEPS_HPP
#define CEFKIT_SWEEPS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cefkit/transceiver.hpp"

namespace cefkit {

enum class SweepParameter { Bandwidth, PaEfficiency };
enum class Spacing { Log, Linear };

std::string_view to_string(SweepParameter parameter);
/// "hz" for bandwidth, "fraction" for efficiency.
std::string_view unit_of(SweepParameter parameter);

struct SweepSpec {
  LinkScenario scenario;
  SweepParameter parameter = SweepParameter::Bandwidth;
  double lo = 100e6;
  double hi = 8e9;
  int points = 64;
  /// Log for bandwidth, linear for efficiency when unset.
  std::optional<Spacing> spacing;
  /// When set, the per-element drive is solved at each sample to hit this SNR.
  std::optional<double> snr_target_db;
  double eirp_ceiling_dbm = 75.0;
  unsigned threads = 0;  // 0: hardware concurrency

  Spacing effective_spacing() const;
};

/// Throws InvalidArgument on lo >= hi, points < 1, a non-positive log range
/// or an efficiency range outside (0, 1].
void validate(const SweepSpec& spec);

/// Grid of `points` values from lo to hi (both included).
std::vector<double> sweep_grid(const SweepSpec& spec);

struct CurvePoint {
  double x = 0.0;
  double cef_bpj = 0.0;
  double rate_bps = 0.0;
  double p_consumed_w = 0.0;
  double snr_db = 0.0;
  double eirp_dbm = 0.0;
  /// False when the SNR target needs more than the EIRP ceiling; the sample
  /// is then evaluated with EIRP clamped to the ceiling.
  bool feasible = true;
};

struct Curve {
  SweepParameter parameter = SweepParameter::Bandwidth;
  std::string band;
  Direction direction = Direction::Uplink;
  Environment environment = Environment::LoS;
  std::optional<double> snr_target_db;
  std::vector<CurvePoint> points;  // x strictly increasing
};

/// One sample of the spec at parameter value x.
CurvePoint evaluate_sample(const SweepSpec& spec, double x);

/// Evaluates every grid point; output order follows the grid.
Curve sweep(const SweepSpec& spec);

struct Crossover {
  bool found = false;
  double x = 0.0;
  std::size_t bracket_index = 0;  // grid index of the first point at or past x
};

/// Smallest x where the curve reaches `reference_cef`, refined by bisection
/// between the bracketing grid points to `rel_tol`. A curve already above
/// the reference at its first point returns that point.
Crossover find_crossover(const SweepSpec& spec, const Curve& curve, double reference_cef,
                         double rel_tol = 1e-6);

/// Smallest x where curve a overtakes curve b (a - b changes sign from
/// negative to non-negative). Both specs must sweep the same parameter over
/// the same grid.
Crossover find_curve_crossing(const SweepSpec& a, const Curve& curve_a, const SweepSpec& b,
                              const Curve& curve_b, double rel_tol = 1e-6);

struct EfficiencyMatch {
  bool achievable = false;
  double efficiency = 0.0;
  double cef_at_efficiency = 0.0;
};

/// Smallest PA efficiency in [lo, 1] with CEF >= target_cef, by bisection to
/// `abs_tol`. Unachievable when CEF at efficiency 1 is still below target.
EfficiencyMatch min_matching_efficiency(double target_cef, const LinkScenario& scenario,
                                        double lo = 1e-3, double abs_tol = 1e-4);

/// d CEF / d eta by central difference, in bit/J per unit efficiency.
double cef_efficiency_slope(const LinkScenario& scenario, double efficiency, double step = 1e-3);

}  // namespace cefkit

#endif  // CEFKIT_SWEEPS_HPP
