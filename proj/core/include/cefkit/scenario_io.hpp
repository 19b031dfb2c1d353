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


#ifndef CEFKIT_SCENARIO_IO_HPP
#define CEFKIT_SCENARIO_IO_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cefkit/netsim.hpp"
#include "cefkit/transceiver.hpp"

namespace cefkit {

/// Environment variable naming an extra directory searched for `<name>.scn`
/// preset files.
inline constexpr const char* kPresetDirEnv = "CEFKIT_PRESET_DIR";

/// A fully resolved scenario file. `network` carries the [network] section;
/// its band, terminals and propagation fields always mirror `link`.
struct ScenarioDocument {
  std::string preset;
  LinkScenario link;
  NetworkScenario network;

  bool operator==(const ScenarioDocument&) const = default;
};

/// Parses a scenario document:
///
///   preset = "subthz-140"      # optional, top level or in [band]
///   [band]
///   bandwidth = 2 GHz
///   [link]
///   direction = "dl"
///
/// Sections: [band], [bs], [ue], [link], [network]. Physical quantities need
/// a unit; fractions may be bare or in %. Keys not set fall back to the
/// preset (mmwave-28 when none is named). `overrides` are "section.key=value"
/// strings applied after the file. Throws ParseError with the location of
/// the first offending token; overrides report line 0.
ScenarioDocument parse_scenario(std::string_view text,
                                std::span<const std::string> overrides = {});

/// Canonical text form: every key written in its base unit, sections in a
/// fixed order. parse_scenario(serialize_scenario(d)) == d.
std::string serialize_scenario(const ScenarioDocument& document);

/// Document for a preset name: one of preset_names(), or `<name>.scn` found
/// in $CEFKIT_PRESET_DIR. Throws InvalidArgument when neither exists.
ScenarioDocument load_preset(std::string_view name);

/// Reads and parses a scenario file. Throws InvalidArgument when the file
/// cannot be read, ParseError on bad contents.
ScenarioDocument load_scenario_file(const std::string& path,
                                    std::span<const std::string> overrides = {});

/// Copies band, terminals and propagation settings from `link` into a
/// network scenario.
NetworkScenario network_from(const LinkScenario& link, NetworkScenario network);

}  // namespace cefkit

#endif  // CEFKIT_SCENARIO_IO_HPP
