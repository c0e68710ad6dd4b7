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

#include "irj/data_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "irj/error.hpp"

namespace irj {
namespace {
constexpr const char* kModule = "cli_io";
}  // namespace

void MeasuredCurve::Validate() const {
  if (displacement.size() != force.size()) {
    throw DomainError(kModule, "displacement and force sample counts differ");
  }
  if (!(lever_arm > 0.0)) throw DomainError(kModule, "lever arm must be positive");
  for (std::size_t i = 1; i < displacement.size(); ++i) {
    if (!(displacement[i] > displacement[i - 1])) {
      throw DomainError(kModule, "displacements must be strictly increasing (sample " +
                                     std::to_string(i) + ")");
    }
  }
}

PlateauEstimate ExtractPlateau(const MeasuredCurve& curve, double window_fraction) {
  curve.Validate();
  const std::size_t n = curve.displacement.size();
  if (n < 10) {
    throw DomainError(kModule,
                      "plateau extraction needs at least 10 samples, got " +
                          std::to_string(n),
                      "too_few_samples");
  }
  if (!(window_fraction > 0.0 && window_fraction <= 0.5)) {
    throw DomainError(kModule, "window fraction must lie in (0, 0.5]");
  }
  const std::size_t window = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::lround(window_fraction * static_cast<double>(n))));

  std::vector<double> moment(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    moment[i] = curve.force[i] * curve.lever_arm;
    peak = std::max(peak, std::fabs(moment[i]));
  }
  std::vector<double> abs_slope(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    abs_slope[i] = std::fabs((moment[i + 1] - moment[i]) /
                             (curve.displacement[i + 1] - curve.displacement[i]));
  }

  // Ties go to the later window: the plateau follows the elastic rise.
  PlateauEstimate best;
  best.window_fraction = window_fraction;
  double best_slope = std::numeric_limits<double>::infinity();
  for (std::size_t begin = 0; begin + window <= n; ++begin) {
    double slope = 0.0;
    for (std::size_t i = begin; i + 1 < begin + window; ++i) slope += abs_slope[i];
    slope /= static_cast<double>(window - 1);
    if (slope <= best_slope) {
      best_slope = slope;
      best.window_begin = begin;
      best.window_end = begin + window;
    }
  }
  double sum = 0.0;
  for (std::size_t i = best.window_begin; i < best.window_end; ++i) sum += moment[i];
  best.moment = sum / static_cast<double>(window);
  best.mean_abs_slope = best_slope;
  const double span = curve.displacement.back() - curve.displacement.front();
  best.low_confidence =
      peak <= 0.0 || best_slope * span / peak > kLowConfidenceSlope;
  return best;
}

PressureFit FitPressureScaling(
    const std::vector<std::pair<double, MeasuredCurve>>& curves,
    double window_fraction) {
  if (curves.size() < 3) {
    throw DomainError(kModule, "pressure fit needs at least three pressures",
                      "insufficient_span");
  }
  double p_min = std::numeric_limits<double>::infinity();
  double p_max = 0.0;
  for (const auto& [pressure, curve] : curves) {
    if (!(pressure > 0.0)) throw DomainError(kModule, "pressures must be positive");
    p_min = std::min(p_min, pressure);
    p_max = std::max(p_max, pressure);
  }
  if (p_max < 2.0 * p_min) {
    throw DomainError(kModule,
                      "pressures must span a ratio of at least 2 (max / min = " +
                          std::to_string(p_max / p_min) + ")",
                      "insufficient_span");
  }

  PressureFit fit;
  for (const auto& [pressure, curve] : curves) {
    fit.plateaus.push_back(ExtractPlateau(curve, window_fraction));
    fit.points.emplace_back(pressure, fit.plateaus.back().moment);
  }
  const double count = static_cast<double>(fit.points.size());
  double mean_p = 0.0;
  double mean_m = 0.0;
  for (const auto& [p, m] : fit.points) {
    mean_p += p;
    mean_m += m;
  }
  mean_p /= count;
  mean_m /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [p, m] : fit.points) {
    sxx += (p - mean_p) * (p - mean_p);
    sxy += (p - mean_p) * (m - mean_m);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_m - fit.slope * mean_p;
  for (const auto& [p, m] : fit.points) {
    const double predicted = fit.slope * p + fit.intercept;
    if (m != 0.0) {
      fit.max_relative_residual =
          std::max(fit.max_relative_residual, std::fabs(predicted - m) / std::fabs(m));
    }
  }
  return fit;
}

}  // namespace irj
