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


#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cefkit/cascade.hpp"
#include "cefkit/netsim.hpp"
#include "cefkit/sweeps.hpp"
#include "cefkit/transceiver.hpp"

namespace {

using namespace cefkit;

Cascade random_cascade(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Component> stages;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = std::pow(10.0, -2.0 + 4.0 * u(rng));
    stages.emplace_back("s", g, std::max(1.0, 1.0 / g) * (1.0 + 10.0 * u(rng)));
  }
  return Cascade(std::move(stages));
}

void BM_CascadeWasteFactor(benchmark::State& state) {
  const Cascade c = random_cascade(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cascade_waste_factor(c));
}
BENCHMARK(BM_CascadeWasteFactor)->Arg(4)->Arg(16)->Arg(256);

void BM_BookkeepingOracle(benchmark::State& state) {
  const Cascade c = random_cascade(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bookkeeping_oracle(c).waste_factor());
}
BENCHMARK(BM_BookkeepingOracle)->Arg(4)->Arg(16)->Arg(256);

void BM_EvaluateLink(benchmark::State& state) {
  const LinkScenario s = preset_scenario("subthz-140");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_link(s).cef_bpj);
}
BENCHMARK(BM_EvaluateLink);

void BM_BandwidthSweep(benchmark::State& state) {
  SweepSpec spec;
  spec.scenario = preset_scenario("subthz-140");
  spec.scenario.direction = Direction::Downlink;
  spec.snr_target_db = 20.0;
  spec.points = static_cast<int>(state.range(0));
  spec.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec).points.size());
}
BENCHMARK(BM_BandwidthSweep)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_NetworkDrop(benchmark::State& state) {
  NetworkScenario s = default_network_scenario();
  s.cell_radius_m = 100.0;
  s.drops = 1;
  s.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_network(s).network_cef_bpj);
}
BENCHMARK(BM_NetworkDrop)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
