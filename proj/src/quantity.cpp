// Copyright 2026 The irj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "irj/quantity.hpp"

#include <charconv>
#include <numbers>
#include <string>
#include <utility>

#include "irj/error.hpp"

namespace irj {
namespace {

struct Unit {
  std::string_view suffix;
  Dimension dim;
  double scale;
};

constexpr Unit kUnits[] = {
    {"m", Dimension::kLength, 1.0},
    {"cm", Dimension::kLength, 1e-2},
    {"mm", Dimension::kLength, 1e-3},
    {"um", Dimension::kLength, 1e-6},
    {"Pa", Dimension::kPressure, 1.0},
    {"kPa", Dimension::kPressure, 1e3},
    {"MPa", Dimension::kPressure, 1e6},
    {"psi", Dimension::kPressure, 6894.757293168361},
    {"rad", Dimension::kAngle, 1.0},
    {"deg", Dimension::kAngle, std::numbers::pi / 180.0},
    {"N", Dimension::kForce, 1.0},
    {"mN", Dimension::kForce, 1e-3},
    {"kN", Dimension::kForce, 1e3},
};

[[noreturn]] void Fail(std::string_view text, const std::string& why) {
  throw DomainError("cli_io", "cannot parse quantity '" + std::string(text) + "': " + why,
                    "usage");
}

}  // namespace

double ParseQuantity(std::string_view text, Dimension dim) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) Fail(text, "no leading number");
  std::string_view suffix(ptr, static_cast<std::size_t>(last - ptr));
  while (!suffix.empty() && suffix.front() == ' ') suffix.remove_prefix(1);
  if (suffix.empty()) return value;
  for (const Unit& unit : kUnits) {
    if (unit.suffix != suffix) continue;
    if (unit.dim != dim) Fail(text, "unit has the wrong dimension");
    return value * unit.scale;
  }
  Fail(text, "unknown unit '" + std::string(suffix) + "'");
}

}  // namespace irj
