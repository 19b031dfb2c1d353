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


#ifndef CEFKIT_QUANTITY_HPP
#define CEFKIT_QUANTITY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cefkit {

/// Physical dimension of a text value and the internal unit it is stored in.
enum class QuantityKind {
  Frequency,      // Hz
  Length,         // m
  Area,           // m2
  Decibel,        // dB
  Gain,           // dBi
  PowerDbm,       // dBm
  PowerWatts,     // W
  Fraction,       // bare or %
  Real,           // bare
  Count,          // bare integer
  PerMilliwatt,   // 1/mW
  PowerPerHertz,  // W/Hz
  Temperature,    // K
};

/// Thrown with the 0-based offset in the value text where the problem is.
class QuantityError : public std::runtime_error {
 public:
  QuantityError(std::size_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses "<number>[ ]<unit>" and converts to the internal unit of `kind`.
double parse_quantity(std::string_view text, QuantityKind kind);

/// Unit written by the canonical serializer ("" for bare kinds).
std::string_view canonical_unit(QuantityKind kind);

/// Accepted units, for error messages.
std::string accepted_units(QuantityKind kind);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

std::string_view trim(std::string_view s);

}  // namespace cefkit

#endif  // CEFKIT_QUANTITY_HPP
