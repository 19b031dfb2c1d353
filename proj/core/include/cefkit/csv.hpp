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


#ifndef CEFKIT_CSV_HPP
#define CEFKIT_CSV_HPP

#include <optional>
#include <ostream>

#include "cefkit/cascade.hpp"
#include "cefkit/netsim.hpp"
#include "cefkit/sweeps.hpp"
#include "cefkit/transceiver.hpp"

namespace cefkit {

// All CSV output uses '.' decimals, LF line endings and a header row.

/// `x_value,unit,cef_gbpj,rate_gbps,p_consumed_w,snr_db,feasible`. feasible is
/// "true" or "false"; when `crossover` is found, an extra row evaluated at x*
/// is inserted in x order with feasible = "crossover".
void write_curve_csv(std::ostream& out, const SweepSpec& spec, const Curve& curve,
                     const std::optional<Crossover>& crossover = std::nullopt);

/// `band,direction,environment,fspl_1m_db,pr_dbw,waste_figure_db,gain_db,snr_db,rate_gbps,pc_w,cef_gbpj`
void write_link_matrix_csv(std::ostream& out, const LinkMatrix& matrix);

/// Aligned text table, one block per band: rows are quantities, columns are
/// UL LoS, UL NLoS, DL LoS, DL NLoS.
void write_link_matrix_text(std::ostream& out, const LinkMatrix& matrix);

/// `radius_m,cells,cef_gbpj,throughput_gbps,power_w,mean_sinr_db,los_fraction,ci_halfwidth`
void write_radius_csv(std::ostream& out, const RadiusSweep& sweep);

/// Human-readable key: value listing.
void write_link_report(std::ostream& out, const LinkScenario& scenario, const LinkReport& report);

/// Stage table plus totals for a cascade.
void write_cascade_report(std::ostream& out, const Cascade& cascade);

}  // namespace cefkit

#endif  // CEFKIT_CSV_HPP
