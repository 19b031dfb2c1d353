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

#ifndef CEFKIT_UNITS_HPP
#define CEFKIT_UNITS_HPP

#include <cmath>

// All powers are carried in watts internally. These helpers are the only
// place decibel conversions happen.
namespace cefkit {

inline constexpr double kSpeedOfLight = 2.998e8;         // m/s
inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kReferenceTemperature = 290.0;   // K
inline constexpr double kPi = 3.14159265358979323846;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

inline double dbm_to_watts(double dbm) { return 1e-3 * db_to_linear(dbm); }
inline double watts_to_dbm(double watts) { return linear_to_db(watts / 1e-3); }

inline double dbw_to_watts(double dbw) { return db_to_linear(dbw); }
inline double watts_to_dbw(double watts) { return linear_to_db(watts); }

inline double dbm_to_dbw(double dbm) { return dbm - 30.0; }
inline double dbw_to_dbm(double dbw) { return dbw + 30.0; }

inline double wavelength(double frequency_hz, double speed_of_light = kSpeedOfLight) {
  return speed_of_light / frequency_hz;
}

}  // namespace cefkit

#endif  // CEFKIT_UNITS_HPP
