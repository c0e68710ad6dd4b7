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

// Mechanics of a partially wrinkled inflated-beam cross-section.
//
// The section is a thin circular film of radius R and thickness t under gauge
// pressure P. The angle theta runs from the compressed side (theta = 0) to
// the tension side (theta = pi) of the bending plane. Only the band
// [theta1, theta2] (and its mirror image in the other half of the section)
// can carry axial tension; everything else is wrinkled.
//
// Moments are reported as magnitudes about the bending axis, scaled by the
// isotropic buckling moment pi * P * R^3.

#ifndef IRJ_SECTION_MECHANICS_HPP_
#define IRJ_SECTION_MECHANICS_HPP_

#include <numbers>

namespace irj {

struct SectionSpec {
  double radius = 0.0;          // m
  double film_thickness = 0.0;  // m
  double pressure = 0.0;        // Pa, gauge
  double theta1 = 0.0;          // rad
  double theta2 = std::numbers::pi;

  // Tensioned band of width `band_width` centred on theta = pi/2.
  static SectionSpec Symmetric(double radius, double film_thickness,
                               double pressure, double band_width);
  static SectionSpec Isotropic(double radius, double film_thickness,
                               double pressure);

  double band_width() const { return theta2 - theta1; }

  // Throws DomainError if any invariant is violated.
  void Validate() const;

  bool operator==(const SectionSpec&) const = default;
};

// Arc width of a taped band converted to its angular width.
double BandWidthFromTape(double tape_width, double radius);

struct WrinkleState {
  double theta0 = 0.0;     // rad, edge of the load-advanced wrinkled region
  double sigma_max = 0.0;  // Pa; +inf once the band has collapsed to a line
};

// Below this gap theta2 - theta0 the scale factor returns its limit -cos(theta2).
inline constexpr double kLimitSwitchover = 1e-7;

// f(theta0; theta2): applied moment over pi P R^3 when the wrinkle boundary
// sits at theta0. Requires 0 <= theta0 <= theta2 <= pi, theta2 > 0.
double MomentScaleFactor(double theta0, double theta2);

// pi * P * R^3.
double IsotropicBucklingMoment(const SectionSpec& section);

// Moment at which the tensioned band has shrunk to its top edge.
double MaxRestoringMoment(const SectionSpec& section);

// Moment at which the stress at theta1 first reaches zero.
double WrinkleOnsetMoment(const SectionSpec& section);

// Peak stress sigma_M that balances the pressure load for a wrinkle boundary
// at theta0.
double PeakStress(const SectionSpec& section, double theta0);

// Inverts the moment law on [theta1, theta2]. Throws OutOfRangeError (bound
// "lower" or "upper") when the moment lies outside
// [WrinkleOnsetMoment, MaxRestoringMoment].
WrinkleState SolveWrinkleBoundary(const SectionSpec& section,
                                  double applied_moment);

// Axial film stress at theta in [0, pi]; zero in the wrinkled ranges.
double StressProfile(const SectionSpec& section, const WrinkleState& state,
                     double theta);

// Soft-plane over stiff-plane maximum moment, sin(band_width / 2).
double StiffnessRatio(double band_width);

namespace detail {
// x - sin(x), accurate for small x.
double XMinusSin(double x);
// Integral of (cos(theta0) - cos(theta)) over [theta0, theta2].
double ActiveBandIntegral(double theta0, double theta2);
}  // namespace detail

}  // namespace irj

#endif  // IRJ_SECTION_MECHANICS_HPP_
