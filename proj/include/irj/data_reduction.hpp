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

// Reduction of measured load-displacement curves: plateau (buckling) moment
// extraction and the linear fit of plateau moment against pressure.

#ifndef IRJ_DATA_REDUCTION_HPP_
#define IRJ_DATA_REDUCTION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

namespace irj {

// Force measured at lever_arm from the clamp, so moment = force * lever_arm.
struct MeasuredCurve {
  std::vector<double> displacement;  // m, strictly increasing
  std::vector<double> force;         // N
  double lever_arm = 0.0;            // m

  void Validate() const;
};

inline constexpr double kDefaultWindowFraction = 0.15;
// Normalised slope (mean |dM/dx| times displacement span over peak |M|)
// above which a plateau estimate is flagged as low confidence.
inline constexpr double kLowConfidenceSlope = 0.05;

struct PlateauEstimate {
  double moment = 0.0;  // N m
  std::size_t window_begin = 0;
  std::size_t window_end = 0;  // one past the last sample
  double mean_abs_slope = 0.0;  // N m / m
  double window_fraction = kDefaultWindowFraction;
  bool low_confidence = false;
};

// Mean moment of the sliding window with the smallest mean absolute slope.
// Needs at least 10 samples and 0 < window_fraction <= 0.5.
PlateauEstimate ExtractPlateau(const MeasuredCurve& curve,
                               double window_fraction = kDefaultWindowFraction);

struct PressureFit {
  double slope = 0.0;      // N m / Pa
  double intercept = 0.0;  // N m
  std::vector<std::pair<double, double>> points;  // (pressure, plateau moment)
  std::vector<PlateauEstimate> plateaus;
  double max_relative_residual = 0.0;
};

// Least-squares line through (pressure, plateau moment). Needs at least three
// pressures with max / min >= 2.
PressureFit FitPressureScaling(
    const std::vector<std::pair<double, MeasuredCurve>>& curves,
    double window_fraction = kDefaultWindowFraction);

}  // namespace irj

#endif  // IRJ_DATA_REDUCTION_HPP_
