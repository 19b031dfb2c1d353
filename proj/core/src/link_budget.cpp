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

#include "cefkit/link_budget.hpp"

#include <cmath>
#include <string>

#include "cefkit/error.hpp"

namespace cefkit {

double fspl_1m_db(double frequency_hz, double speed_of_light) {
  if (!(frequency_hz > 0.0)) throw InvalidArgument("carrier frequency must be > 0");
  return 20.0 * std::log10(4.0 * kPi * frequency_hz / speed_of_light);
}

double path_loss_ci_db(const ChannelSpec& channel, double speed_of_light) {
  if (!(channel.ple > 0.0)) throw InvalidArgument("path loss exponent must be > 0");
  if (!(channel.reference_distance_m > 0.0)) {
    throw InvalidArgument("reference distance must be > 0");
  }
  if (!(channel.distance_m >= channel.reference_distance_m)) {
    throw InvalidArgument("distance " + std::to_string(channel.distance_m) +
                          " m is inside the reference distance");
  }
  return fspl_1m_db(channel.carrier_frequency_hz, speed_of_light) +
         10.0 * channel.ple * std::log10(channel.distance_m / channel.reference_distance_m);
}

double aperture_gain_dbi(const AntennaSpec& antenna, double frequency_hz, double speed_of_light) {
  if (!(antenna.aperture_area_m2 > 0.0)) throw InvalidArgument("aperture area must be > 0");
  if (!(antenna.efficiency > 0.0) || antenna.efficiency > 1.0) {
    throw InvalidArgument("antenna efficiency must be in (0, 1]");
  }
  if (!(frequency_hz > 0.0)) throw InvalidArgument("carrier frequency must be > 0");
  const double lambda = wavelength(frequency_hz, speed_of_light);
  return linear_to_db(antenna.efficiency * 4.0 * kPi * antenna.aperture_area_m2 / (lambda * lambda));
}

double received_power_dbm(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi,
                          double path_loss_db) {
  return tx_power_dbm + tx_gain_dbi + rx_gain_dbi - path_loss_db;
}

double noise_power_dbm(const NoiseSpec& noise) {
  if (!(noise.bandwidth_hz > 0.0)) throw InvalidArgument("bandwidth must be > 0");
  if (!(noise.noise_figure_db >= 0.0)) throw InvalidArgument("noise figure must be >= 0 dB");
  if (!(noise.temperature_k > 0.0)) throw InvalidArgument("temperature must be > 0 K");
  return watts_to_dbm(kBoltzmann * noise.temperature_k * noise.bandwidth_hz) +
         noise.noise_figure_db;
}

double shannon_rate_bps(double bandwidth_hz, double snr_db) {
  if (!(bandwidth_hz > 0.0)) throw InvalidArgument("bandwidth must be > 0");
  return bandwidth_hz * std::log2(1.0 + db_to_linear(snr_db));
}

double consumption_efficiency(double rate_bps, double consumed_w) {
  if (!(consumed_w > 0.0)) throw InvalidArgument("consumed power must be > 0");
  return rate_bps / consumed_w;
}

}  // namespace cefkit
