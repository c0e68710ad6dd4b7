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

// Quantities with explicit unit suffixes on the command line ("6.89kPa",
// "33.5mm", "90deg"). A bare number is taken as SI.

#ifndef IRJ_QUANTITY_HPP_
#define IRJ_QUANTITY_HPP_

#include <string_view>

namespace irj {

enum class Dimension { kLength, kPressure, kAngle, kForce };

// Throws DomainError (kind "usage") on malformed text or a unit that does
// not match the dimension.
double ParseQuantity(std::string_view text, Dimension dim);

}  // namespace irj

#endif  // IRJ_QUANTITY_HPP_
