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


#include "cefkit/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cefkit/error.hpp"
#include "cefkit/link_budget.hpp"
#include "cefkit/parallel.hpp"

namespace cefkit {

std::string_view to_string(SweepParameter parameter) {
  return parameter == SweepParameter::Bandwidth ? "bandwidth" : "pa_efficiency";
}

std::string_view unit_of(SweepParameter parameter) {
  return parameter == SweepParameter::Bandwidth ? "hz" : "fraction";
}

Spacing SweepSpec::effective_spacing() const {
  if (spacing) return *spacing;
  return parameter == SweepParameter::Bandwidth ? Spacing::Log : Spacing::Linear;
}

void validate(const SweepSpec& spec) {
  validate(spec.scenario);
  if (spec.points < 1) throw InvalidArgument("sweep needs at least one point");
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
    throw InvalidArgument("sweep range must be finite");
  }
  if (spec.points > 1 && !(spec.lo < spec.hi)) throw InvalidArgument("sweep range needs lo < hi");
  if (spec.effective_spacing() == Spacing::Log && !(spec.lo > 0.0)) {
    throw InvalidArgument("log-spaced sweep needs lo > 0");
  }
  if (spec.parameter == SweepParameter::Bandwidth && !(spec.lo > 0.0)) {
    throw InvalidArgument("bandwidth sweep needs lo > 0");
  }
  if (spec.parameter == SweepParameter::PaEfficiency && (!(spec.lo > 0.0) || spec.hi > 1.0)) {
    throw InvalidArgument("efficiency sweep range must lie in (0, 1]");
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> grid(static_cast<std::size_t>(spec.points));
  if (spec.points == 1) {
    grid[0] = spec.lo;
    return grid;
  }
  const double steps = spec.points - 1;
  const bool log_spaced = spec.effective_spacing() == Spacing::Log;
  for (int i = 0; i < spec.points; ++i) {
    const double t = i / steps;
    grid[static_cast<std::size_t>(i)] =
        log_spaced ? spec.lo * std::pow(spec.hi / spec.lo, t) : spec.lo + t * (spec.hi - spec.lo);
  }
  grid.front() = spec.lo;
  grid.back() = spec.hi;
  return grid;
}

CurvePoint evaluate_sample(const SweepSpec& spec, double x) {
  LinkScenario s = spec.scenario;
  if (spec.parameter == SweepParameter::Bandwidth) {
    s.band.bandwidth_hz = x;
  } else {
    s.band.pa_efficiency = x;
  }

  CurvePoint p;
  p.x = x;
  if (spec.snr_target_db) {
    const double gt = terminal_gain_dbi(s.transmitter(), s);
    s.tx_power_dbm = required_tx_power_dbm(s, *spec.snr_target_db);
    if (s.tx_power_dbm + gt > spec.eirp_ceiling_dbm) {
      p.feasible = false;
      s.tx_power_dbm = spec.eirp_ceiling_dbm - gt;
    }
  }
  const LinkReport r = evaluate_link(s);
  p.cef_bpj = r.cef_bpj;
  p.rate_bps = r.rate_bps;
  p.p_consumed_w = r.p_consumed_w;
  p.snr_db = r.snr_db;
  p.eirp_dbm = r.eirp_dbm;
  return p;
}

Curve sweep(const SweepSpec& spec) {
  const std::vector<double> grid = sweep_grid(spec);
  Curve curve;
  curve.parameter = spec.parameter;
  curve.band = spec.scenario.band.name;
  curve.direction = spec.scenario.direction;
  curve.environment = spec.scenario.environment;
  curve.snr_target_db = spec.snr_target_db;
  curve.points.resize(grid.size());
  parallel_for(grid.size(), spec.threads,
               [&](std::size_t i) { curve.points[i] = evaluate_sample(spec, grid[i]); });
  return curve;
}

namespace {

// Bisects f on [lo, hi] where f(lo) < 0 <= f(hi); returns the upper end.
template <typename F>
double bisect(F&& f, double lo, double hi, bool log_spaced, double rel_tol) {
  for (int iter = 0; iter < 200 && (hi - lo) > rel_tol * hi; ++iter) {
    const double mid = log_spaced ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    if (f(mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

Crossover find_crossover(const SweepSpec& spec, const Curve& curve, double reference_cef,
                         double rel_tol) {
  Crossover result;
  const auto& pts = curve.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].cef_bpj < reference_cef) continue;
    result.found = true;
    result.bracket_index = i;
    if (i == 0) {
      result.x = pts[0].x;
      return result;
    }
    result.x = bisect([&](double x) { return evaluate_sample(spec, x).cef_bpj - reference_cef; },
                      pts[i - 1].x, pts[i].x, spec.effective_spacing() == Spacing::Log, rel_tol);
    return result;
  }
  return result;
}

Crossover find_curve_crossing(const SweepSpec& a, const Curve& curve_a, const SweepSpec& b,
                              const Curve& curve_b, double rel_tol) {
  if (a.parameter != b.parameter || curve_a.points.size() != curve_b.points.size()) {
    throw InvalidArgument("curve crossing needs two sweeps over the same grid");
  }
  Crossover result;
  const auto& pa = curve_a.points;
  const auto& pb = curve_b.points;
  for (std::size_t i = 1; i < pa.size(); ++i) {
    if (pa[i].x != pb[i].x) throw InvalidArgument("curve crossing needs identical grids");
    const bool below_before = pa[i - 1].cef_bpj < pb[i - 1].cef_bpj;
    const bool above_now = pa[i].cef_bpj >= pb[i].cef_bpj;
    if (!(below_before && above_now)) continue;
    result.found = true;
    result.bracket_index = i;
    result.x = bisect(
        [&](double x) { return evaluate_sample(a, x).cef_bpj - evaluate_sample(b, x).cef_bpj; },
        pa[i - 1].x, pa[i].x, a.effective_spacing() == Spacing::Log, rel_tol);
    return result;
  }
  return result;
}

namespace {

double cef_at(LinkScenario s, double efficiency) {
  s.band.pa_efficiency = efficiency;
  return evaluate_link(s).cef_bpj;
}

}  // namespace

EfficiencyMatch min_matching_efficiency(double target_cef, const LinkScenario& scenario, double lo,
                                        double abs_tol) {
  if (!(lo > 0.0) || lo > 1.0) throw InvalidArgument("efficiency lower bound must be in (0, 1]");
  if (!(abs_tol > 0.0)) throw InvalidArgument("tolerance must be > 0");

  EfficiencyMatch match;
  const double top = cef_at(scenario, 1.0);
  if (top < target_cef) {
    match.cef_at_efficiency = top;
    match.efficiency = 1.0;
    return match;
  }
  match.achievable = true;
  if (cef_at(scenario, lo) >= target_cef) {
    match.efficiency = lo;
  } else {
    double a = lo;
    double b = 1.0;
    while (b - a > abs_tol) {
      const double mid = 0.5 * (a + b);
      if (cef_at(scenario, mid) >= target_cef) {
        b = mid;
      } else {
        a = mid;
      }
    }
    match.efficiency = b;
  }
  match.cef_at_efficiency = cef_at(scenario, match.efficiency);
  return match;
}

double cef_efficiency_slope(const LinkScenario& scenario, double efficiency, double step) {
  const double lo = std::max(efficiency - step, 1e-6);
  const double hi = std::min(efficiency + step, 1.0);
  if (!(hi > lo)) throw InvalidArgument("slope step collapses at this efficiency");
  return (cef_at(scenario, hi) - cef_at(scenario, lo)) / (hi - lo);
}

}  // namespace cefkit
