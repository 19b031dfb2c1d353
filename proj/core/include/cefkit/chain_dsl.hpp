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


#ifndef CEFKIT_CHAIN_DSL_HPP
#define CEFKIT_CHAIN_DSL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cefkit/cascade.hpp"

namespace cefkit {

/// Result of parsing a chain description.
struct ParsedChain {
  Cascade cascade;
  /// Stage holding the channel (merged with any adjacent antennas).
  std::optional<std::size_t> channel_index;
  /// Source line of every stage, parallel to cascade.components().
  std::vector<std::size_t> stage_lines;
};

/// Parses a line-oriented chain, source first:
///
///   source power=1mW
///   passive tx-mixer loss=6dB
///   amp pa gain=20dB eta=0.28
///   lna lna-bank gain=20dB fom=24.83/mW count=1024
///   antenna tx-array area=5cm2 eff=0.6 elements=8
///   channel ci f=28GHz d=100m n=2        (or: channel pl=120dB)
///   antenna rx-array gain=59dBi
///   load lo power=10dBm
///
/// `#` starts a comment. At most one channel; antenna lines must sit right
/// before or after it and are folded into one passive over-the-air stage of
/// loss PL - Gt - Gr + 10 log10(elements). `load` lines add off-path power.
/// Throws ParseError with line and column.
ParsedChain parse_chain(std::string_view text);

/// Reads and parses a chain file; InvalidArgument if unreadable.
ParsedChain load_chain_file(const std::string& path);

}  // namespace cefkit

#endif  // CEFKIT_CHAIN_DSL_HPP
