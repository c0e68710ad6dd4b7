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

#include "irj/joint_model.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "irj/error.hpp"
#include "oracle.hpp"

namespace irj {
namespace {

constexpr double kPi = std::numbers::pi;

JointSpec MakeJoint(double band_width, double pressure = 6890.0) {
  JointSpec j;
  j.section = SectionSpec::Symmetric(0.0335, 50e-6, pressure, band_width);
  j.length = 0.06;
  j.wrinkle_strain = 0.333;
  j.elastic_slope = 20.0;
  j.plateau_onset_angle = 0.3;
  return j;
}

// Quadrature of the linear stress profile over the tensioned set for bending
// toward psi, with the stress vanishing at the lowest tensioned point.
double OracleOnset(const SectionSpec& s, double psi) {
  double h_min = 1.0;
  const std::size_t n = 200000;
  for (std::size_t i = 0; i <= n; ++i) {
    const double th = s.theta1 + s.band_width() * double(i) / double(n);
    h_min = std::min({h_min, -std::cos(th - psi), -std::cos(-th - psi)});
  }
  double num = 0.0, den = 0.0;
  for (double sign : {1.0, -1.0}) {
    const auto h = [&](double th) { return -std::cos(sign * th - psi); };
    num += oracle::Simpson([&](double th) { return (h(th) - h_min) * h(th); }, s.theta1, s.theta2);
    den += oracle::Simpson([&](double th) { return h(th) - h_min; }, s.theta1, s.theta2);
  }
  return IsotropicBucklingMoment(s) * std::max(0.0, num / den);
}

TEST(BendingDirection, WrapsIntoRange) {
  EXPECT_NEAR(BendingDirection(-0.5 * kPi).psi(), 1.5 * kPi, 1e-15);
  EXPECT_NEAR(BendingDirection(5 * kPi).psi(), kPi, 1e-14);
  EXPECT_EQ(BendingDirection(2 * kPi).psi(), 0.0);
  EXPECT_NEAR(BendingDirection(0.9 * kPi).DistanceToSoftPlane(), 0.1 * kPi, 1e-15);
  EXPECT_NEAR(BendingDirection::Stiff().DistanceToSoftPlane(), 0.5 * kPi, 1e-15);
}

TEST(RotationLimit, FormulaValues) {
  EXPECT_NEAR(RotationLimit(0.333, 0.06, 0.0335), 0.596417910447761, 1e-14);
  EXPECT_EQ(RotationLimit(0.0, 0.06, 0.0335), 0.0);
  EXPECT_NEAR(RotationLimit(0.333, 0.12, 0.0335), 2.0 * RotationLimit(0.333, 0.06, 0.0335),
              1e-15);
  JointSpec j = MakeJoint(kPi / 4);
  j.rotation_limit_override = 1.2;
  EXPECT_EQ(RotationLimit(j), 1.2);
}

TEST(DirectionalMaxMoment, AnchorsAtSoftAndStiffPlanes) {
  const JointSpec j = MakeJoint(kPi / 4);
  const double scale = IsotropicBucklingMoment(j.section);
  EXPECT_NEAR(DirectionalMaxMoment(j, BendingDirection::Soft()), scale * std::sin(kPi / 8),
              1e-15);
  EXPECT_EQ(DirectionalMaxMoment(j, BendingDirection::Stiff()), scale);
  const JointSpec iso = MakeJoint(kPi);
  for (double psi = 0.0; psi < 2 * kPi; psi += 0.1) {
    EXPECT_EQ(DirectionalMaxMoment(iso, BendingDirection(psi)), scale);
  }
}

TEST(DirectionalMaxMoment, MatchesSampledSet) {
  for (double w : {kPi / 16, kPi / 4, kPi / 2, 2.5}) {
    const JointSpec j = MakeJoint(w);
    for (double psi = 0.0; psi < 2 * kPi; psi += 0.37) {
      const double sampled = oracle::SampledDirectionalMax(j.section, psi);
      EXPECT_NEAR(DirectionalMaxMoment(j, BendingDirection(psi)), sampled, 1e-9) << w << " " << psi;
    }
  }
}

TEST(DirectionalMaxMoment, PeriodicContinuousMinimalAtSoftPlane) {
  const JointSpec j = MakeJoint(kPi / 3);
  const double at_soft = DirectionalMaxMoment(j, BendingDirection::Soft());
  double prev = at_soft;
  for (int i = 1; i <= 3600; ++i) {
    const double psi = 2 * kPi * i / 3600.0;
    const double m = DirectionalMaxMoment(j, BendingDirection(psi));
    EXPECT_GE(m, at_soft - 1e-15);
    EXPECT_NEAR(m, DirectionalMaxMoment(j, BendingDirection(psi + kPi)), 1e-14);
    EXPECT_LT(std::fabs(m - prev), 0.01);
    prev = m;
  }
}

TEST(DirectionalMaxMoment, RatioIsSinHalfWidth) {
  for (double w : {kPi / 16, kPi / 8, kPi / 4, 3 * kPi / 8, kPi / 2}) {
    const JointSpec j = MakeJoint(w);
    EXPECT_NEAR(DirectionalMaxMoment(j, BendingDirection::Soft()) /
                    DirectionalMaxMoment(j, BendingDirection::Stiff()),
                std::sin(w / 2), 1e-15);
  }
}

TEST(DirectionalOnsetMoment, ReducesToSectionOnsetOnSoftPlane) {
  for (double w : {kPi / 8, kPi / 2, kPi}) {
    const JointSpec j = MakeJoint(w);
    EXPECT_NEAR(DirectionalOnsetMoment(j, BendingDirection::Soft()),
                WrinkleOnsetMoment(j.section), 1e-14);
  }
}

TEST(DirectionalOnsetMoment, MatchesQuadrature) {
  for (double w : {kPi / 8, kPi / 2, 2.5}) {
    const JointSpec j = MakeJoint(w);
    for (double psi = 0.0; psi < 2 * kPi; psi += 0.41) {
      const double onset = DirectionalOnsetMoment(j, BendingDirection(psi));
      EXPECT_NEAR(onset, OracleOnset(j.section, psi), 1e-6 * IsotropicBucklingMoment(j.section));
      EXPECT_LE(onset, DirectionalMaxMoment(j, BendingDirection(psi)) + 1e-15);
    }
  }
}

TEST(RestoringMomentCurve, ShapeAndEndpoints) {
  const JointSpec j = MakeJoint(kPi / 4);
  for (BendingDirection dir : {BendingDirection::Soft(), BendingDirection::Stiff(),
                               BendingDirection(0.7)}) {
    const double m_max = DirectionalMaxMoment(j, dir);
    EXPECT_EQ(RestoringMomentCurve(j, dir, 0.0), 0.0);
    EXPECT_EQ(RestoringMomentCurve(j, dir, j.plateau_onset_angle), m_max);
    EXPECT_EQ(RestoringMomentCurve(j, dir, RotationLimit(j)), m_max);
    double prev = 0.0;
    for (int i = 1; i <= 2000; ++i) {
      const double a = RotationLimit(j) * i / 2000.0;
      const double m = RestoringMomentCurve(j, dir, a);
      EXPECT_GE(m, prev - 1e-15);
      EXPECT_LE(m, m_max + 1e-15);
      EXPECT_LT(m - prev, j.elastic_slope * RotationLimit(j) / 2000.0 * 1.0001);
      prev = m;
    }
  }
}

TEST(RestoringMomentCurve, LinearPartHasElasticSlope) {
  const JointSpec j = MakeJoint(kPi / 4);
  const double onset = DirectionalOnsetMoment(j, BendingDirection::Soft());
  const double a = 0.5 * onset / j.elastic_slope;
  EXPECT_NEAR(RestoringMomentCurve(j, BendingDirection::Soft(), a), j.elastic_slope * a, 1e-15);
}

TEST(RestoringMomentCurve, PlateauRatioForQuarterPiWidth) {
  const JointSpec j = MakeJoint(kPi / 2);
  const double a = RotationLimit(j);
  EXPECT_NEAR(RestoringMomentCurve(j, BendingDirection::Soft(), a) /
                  RestoringMomentCurve(j, BendingDirection::Stiff(), a),
              0.70710678118654752, 1e-12);
}

TEST(RestoringMomentCurve, LinearInPressure) {
  const JointSpec j = MakeJoint(kPi / 4);
  const JointSpec j2 = j.WithPressure(2.0 * j.section.pressure);
  for (double a = 0.0; a <= RotationLimit(j); a += 0.01) {
    EXPECT_NEAR(RestoringMomentCurve(j2, BendingDirection(0.3), a),
                2.0 * RestoringMomentCurve(j, BendingDirection(0.3), a), 1e-13);
  }
}

TEST(RestoringMomentCurve, RejectsAnglesOutsideTheLimit) {
  const JointSpec j = MakeJoint(kPi / 4);
  EXPECT_THROW(RestoringMomentCurve(j, BendingDirection::Soft(), -0.01), DomainError);
  EXPECT_THROW(RestoringMomentCurve(j, BendingDirection::Soft(), RotationLimit(j) + 0.01),
               DomainError);
}

TEST(RestoringMomentCurve, RejectsTooSoftElasticSlope) {
  JointSpec j = MakeJoint(kPi / 4);
  j.elastic_slope = 0.01;
  EXPECT_THROW(RestoringMomentCurve(j, BendingDirection::Stiff(), 0.1), DomainError);
}

TEST(JointSpec, ValidateChecksInvariants) {
  JointSpec j = MakeJoint(kPi / 4);
  EXPECT_NO_THROW(j.Validate());
  j.plateau_onset_angle = 0.7;
  EXPECT_THROW(j.Validate(), DomainError);
  j = MakeJoint(kPi / 4);
  j.wrinkle_strain = 1.0;
  EXPECT_THROW(j.Validate(), DomainError);
  j = MakeJoint(kPi / 4);
  j.length = 0.0;
  EXPECT_THROW(j.Validate(), DomainError);
  j = MakeJoint(kPi / 4);
  j.elastic_slope = 0.0;
  EXPECT_THROW(j.Validate(), DomainError);
}

}  // namespace
}  // namespace irj
