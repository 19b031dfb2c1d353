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

#ifndef CEFKIT_LINK_BUDGET_HPP
#define CEFKIT_LINK_BUDGET_HPP

#include "cefkit/units.hpp"

namespace cefkit {

/// Close-in (CI) free-space reference path loss model inputs.
struct ChannelSpec {
  double carrier_frequency_hz = 28e9;
  double distance_m = 100.0;
  double ple = 2.0;
  double reference_distance_m = 1.0;
};

struct AntennaSpec {
  double aperture_area_m2 = 0.5;
  double efficiency = 0.6;
};

struct NoiseSpec {
  double bandwidth_hz = 400e6;
  double noise_figure_db = 10.0;
  double temperature_k = kReferenceTemperature;
};

/// Free-space path loss over the first metre, 20 log10(4 pi f / c).
double fspl_1m_db(double frequency_hz, double speed_of_light = kSpeedOfLight);

/// FSPL(f, 1 m) + 10 n log10(d / 1 m). Rejects d below the reference distance.
double path_loss_ci_db(const ChannelSpec& channel, double speed_of_light = kSpeedOfLight);

/// 10 log10(eta * 4 pi A / lambda^2).
double aperture_gain_dbi(const AntennaSpec& antenna, double frequency_hz,
                         double speed_of_light = kSpeedOfLight);

double received_power_dbm(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                          double path_loss_db);

/// 10 log10(k T B / 1 mW) + NF.
double noise_power_dbm(const NoiseSpec& noise);

/// B log2(1 + SNR). An SNR of -inf dB gives zero.
double shannon_rate_bps(double bandwidth_hz, double snr_db);

/// Consumption efficiency factor: bits per joule.
double consumption_efficiency(double rate_bps, double consumed_w);

}  // namespace cefkit

#endif  // CEFKIT_LINK_BUDGET_HPP
