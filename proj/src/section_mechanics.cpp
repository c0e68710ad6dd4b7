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

#include "irj/section_mechanics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "irj/error.hpp"

namespace irj {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kModule = "section_mechanics";

std::string Describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " = " << value;
  return os.str();
}

double SinSquaredHalf(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

}  // namespace

namespace detail {

double XMinusSin(double x) {
  if (std::fabs(x) >= 0.5) return x - std::sin(x);
  // Taylor series; terms decay at least by x^2 / 42 < 0.006.
  const double x2 = x * x;
  double term = x * x2 / 6.0;
  double sum = 0.0;
  for (int k = 1; k < 12; ++k) {
    sum += term;
    term *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return sum;
}

double ActiveBandIntegral(double theta0, double theta2) {
  // delta*cos(theta0) - (sin(theta2) - sin(theta0)), expanded about theta0 so
  // that no two O(delta) terms are subtracted.
  const double delta = theta2 - theta0;
  return std::cos(theta0) * XMinusSin(delta) +
         2.0 * std::sin(theta0) * SinSquaredHalf(delta);
}

}  // namespace detail

SectionSpec SectionSpec::Symmetric(double radius, double film_thickness,
                                   double pressure, double band_width) {
  if (!(band_width > 0.0 && band_width <= kPi)) {
    throw DomainError(kModule,
                      Describe("band width must lie in (0, pi], got", band_width));
  }
  SectionSpec s;
  s.radius = radius;
  s.film_thickness = film_thickness;
  s.pressure = pressure;
  if (band_width == kPi) {
    s.theta1 = 0.0;
    s.theta2 = kPi;
  } else {
    s.theta1 = 0.5 * (kPi - band_width);
    s.theta2 = 0.5 * (kPi + band_width);
  }
  return s;
}

SectionSpec SectionSpec::Isotropic(double radius, double film_thickness,
                                   double pressure) {
  return Symmetric(radius, film_thickness, pressure, kPi);
}

void SectionSpec::Validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError(kModule, Describe("radius must be positive, got", radius));
  }
  if (!(film_thickness > 0.0) || !std::isfinite(film_thickness)) {
    throw DomainError(kModule, Describe("film thickness must be positive, got",
                                        film_thickness));
  }
  if (!(pressure > 0.0) || !std::isfinite(pressure)) {
    throw DomainError(kModule,
                      Describe("pressure must be positive, got", pressure));
  }
  if (!(theta1 >= 0.0 && theta1 < theta2 && theta2 <= kPi)) {
    throw DomainError(kModule, "tensioned band must satisfy 0 <= theta1 < "
                               "theta2 <= pi, got [" +
                                   std::to_string(theta1) + ", " +
                                   std::to_string(theta2) + "]");
  }
}

double BandWidthFromTape(double tape_width, double radius) {
  if (!(radius > 0.0)) {
    throw DomainError(kModule, Describe("radius must be positive, got", radius));
  }
  if (!(tape_width > 0.0 && tape_width <= kPi * radius)) {
    throw DomainError(kModule, Describe("tape width must lie in (0, pi R], got",
                                        tape_width));
  }
  return tape_width / radius;
}

double MomentScaleFactor(double theta0, double theta2) {
  if (!(theta0 >= 0.0 && theta0 <= theta2 && theta2 <= kPi)) {
    throw DomainError(kModule, "scale factor requires 0 <= theta0 <= theta2 <= "
                               "pi, got theta0 = " +
                                   std::to_string(theta0) +
                                   ", theta2 = " + std::to_string(theta2));
  }
  if (theta2 == 0.0) {
    throw DomainError(kModule, "scale factor undefined for theta0 = theta2 = 0");
  }
  const double delta = theta2 - theta0;
  if (delta < kLimitSwitchover) return -std::cos(theta2);

  // Closed form rearranged around theta0:
  //   N = (2d - sin 2d) - 8 sin^2(d/2) cos(theta0) sin(theta2)
  //   D = cos(theta0) (d - sin d) + 2 sin(theta0) sin^2(d/2)
  //   f = N / (4 D)
  if (theta2 == kPi && delta >= 0.5) {
    // sin(theta2) = 0 and the sines of d reflect onto theta0 exactly, which
    // keeps f(0, pi) = 1/2 free of rounding.
    const double numerator = 2.0 * delta + std::sin(2.0 * theta0);
    const double denominator = std::cos(theta0) * (delta - std::sin(theta0)) +
                               2.0 * std::sin(theta0) * SinSquaredHalf(delta);
    return numerator / (4.0 * denominator);
  }
  const double numerator = detail::XMinusSin(2.0 * delta) -
                           8.0 * SinSquaredHalf(delta) * std::cos(theta0) *
                               std::sin(theta2);
  const double denominator = detail::ActiveBandIntegral(theta0, theta2);
  return numerator / (4.0 * denominator);
}

double IsotropicBucklingMoment(const SectionSpec& section) {
  const double r = section.radius;
  return kPi * section.pressure * r * r * r;
}

double MaxRestoringMoment(const SectionSpec& section) {
  section.Validate();
  if (section.theta1 == 0.0 && section.theta2 == kPi) {
    return IsotropicBucklingMoment(section);
  }
  return IsotropicBucklingMoment(section) * MomentScaleFactor(section.theta2,
                                                              section.theta2);
}

double WrinkleOnsetMoment(const SectionSpec& section) {
  section.Validate();
  return IsotropicBucklingMoment(section) *
         MomentScaleFactor(section.theta1, section.theta2);
}

double PeakStress(const SectionSpec& section, double theta0) {
  section.Validate();
  if (!(theta0 >= section.theta1 && theta0 <= section.theta2)) {
    throw DomainError(kModule, Describe("wrinkle boundary outside the tensioned "
                                        "band, theta0",
                                        theta0));
  }
  // Pressure balance: pi P R^2 = 2 t R sigma_M * integral / (1 + cos theta0).
  const double integral = detail::ActiveBandIntegral(theta0, section.theta2);
  if (integral <= 0.0) return std::numeric_limits<double>::infinity();
  const double one_plus_cos = 2.0 * std::cos(0.5 * theta0) * std::cos(0.5 * theta0);
  return kPi * section.pressure * section.radius * one_plus_cos /
         (2.0 * section.film_thickness * integral);
}

WrinkleState SolveWrinkleBoundary(const SectionSpec& section,
                                  double applied_moment) {
  section.Validate();
  const double scale = IsotropicBucklingMoment(section);
  const double f_target = applied_moment / scale;
  const double f_lo = MomentScaleFactor(section.theta1, section.theta2);
  const double f_hi = MomentScaleFactor(section.theta2, section.theta2);
  const double slack = 1e-12 * std::max(1.0, std::fabs(f_hi));

  if (f_target < f_lo - slack) {
    throw OutOfRangeError(
        kModule, "lower",
        Describe("applied moment below wrinkle onset; the section is not "
                 "wrinkling beyond the enforced band. applied",
                 applied_moment) +
            Describe(", onset", f_lo * scale));
  }
  if (f_target > f_hi + slack) {
    throw OutOfRangeError(
        kModule, "upper",
        Describe("applied moment exceeds the maximum restoring moment; no "
                 "equilibrium, the beam buckles. applied",
                 applied_moment) +
            Describe(", maximum", f_hi * scale));
  }

  double theta0;
  if (f_target <= f_lo) {
    theta0 = section.theta1;
  } else if (f_target >= f_hi) {
    theta0 = section.theta2;
  } else {
    // f is nondecreasing on the band, so plain bisection brackets the root.
    double lo = section.theta1;
    double hi = section.theta2;
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (MomentScaleFactor(mid, section.theta2) < f_target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    theta0 = 0.5 * (lo + hi);
  }
  return WrinkleState{theta0, PeakStress(section, theta0)};
}

double StressProfile(const SectionSpec& section, const WrinkleState& state,
                     double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw DomainError(kModule, Describe("theta must lie in [0, pi], got", theta));
  }
  if (theta <= state.theta0 || theta > section.theta2) return 0.0;
  // (cos theta0 - cos theta) / (1 + cos theta0) in product form.
  const double gap = 2.0 * std::sin(0.5 * (theta + state.theta0)) *
                     std::sin(0.5 * (theta - state.theta0));
  const double c = std::cos(0.5 * state.theta0);
  const double one_plus_cos = 2.0 * c * c;
  if (one_plus_cos <= 0.0) return 0.0;
  return state.sigma_max * gap / one_plus_cos;
}

double StiffnessRatio(double band_width) {
  if (!(band_width >= 0.0 && band_width <= kPi)) {
    throw DomainError(kModule,
                      Describe("band width must lie in [0, pi], got", band_width));
  }
  return std::sin(0.5 * band_width);
}

}  // namespace irj
