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

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "irj/error.hpp"

namespace irj {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr const char* kModule = "joint_model";

double WrapTwoPi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

struct Arc {
  double lo;
  double hi;
};

std::array<Arc, 2> TensionedArcs(const SectionSpec& s) {
  return {Arc{s.theta1, s.theta2}, Arc{-s.theta2, -s.theta1}};
}

bool ArcContains(const Arc& arc, double angle) {
  return WrapTwoPi(angle - arc.lo) <= arc.hi - arc.lo;
}

// Height on the tension side for bending toward psi: -cos(theta - psi).
double Height(double theta, double psi) { return -std::cos(theta - psi); }

}  // namespace

BendingDirection::BendingDirection(double psi) : psi_(WrapTwoPi(psi)) {}

double BendingDirection::DistanceToSoftPlane() const {
  const double d = std::fmod(psi_, kPi);
  return std::min(d, kPi - d);
}

void JointSpec::Validate() const {
  section.Validate();
  if (!(length > 0.0)) {
    throw DomainError(kModule, "joint length must be positive");
  }
  if (!(wrinkle_strain >= 0.0 && wrinkle_strain < 1.0)) {
    throw DomainError(kModule, "wrinkle strain must lie in [0, 1)");
  }
  if (!(elastic_slope > 0.0)) {
    throw DomainError(kModule, "elastic slope must be positive");
  }
  if (rotation_limit_override && !(*rotation_limit_override > 0.0)) {
    throw DomainError(kModule, "rotation limit override must be positive");
  }
  const double limit = RotationLimit(*this);
  if (!(plateau_onset_angle > 0.0 && plateau_onset_angle < limit)) {
    throw DomainError(kModule, "plateau onset angle " +
                                   std::to_string(plateau_onset_angle) +
                                   " must lie in (0, rotation limit = " +
                                   std::to_string(limit) + ")");
  }
  if (!std::isfinite(mount_rotation)) {
    throw DomainError(kModule, "mount rotation must be finite");
  }
}

JointSpec JointSpec::WithPressure(double pressure) const {
  JointSpec scaled = *this;
  scaled.elastic_slope = elastic_slope * (pressure / section.pressure);
  scaled.section.pressure = pressure;
  return scaled;
}

double RotationLimit(double wrinkle_strain, double length, double radius) {
  if (!(radius > 0.0) || !(length > 0.0) || wrinkle_strain < 0.0) {
    throw DomainError(kModule,
                      "rotation limit needs strain >= 0, length > 0, radius > 0");
  }
  return wrinkle_strain * length / radius;
}

double RotationLimit(const JointSpec& joint) {
  if (joint.rotation_limit_override) return *joint.rotation_limit_override;
  return RotationLimit(joint.wrinkle_strain, joint.length, joint.section.radius);
}

double DirectionalMaxMoment(const SectionSpec& section, BendingDirection dir) {
  section.Validate();
  const double psi = dir.psi();
  double best = -1.0;
  for (const Arc& arc : TensionedArcs(section)) {
    // -cos(theta - psi) peaks at theta = psi + pi.
    if (ArcContains(arc, psi + kPi)) return IsotropicBucklingMoment(section);
    best = std::max({best, Height(arc.lo, psi), Height(arc.hi, psi)});
  }
  return IsotropicBucklingMoment(section) * best;
}

double DirectionalMaxMoment(const JointSpec& joint, BendingDirection dir) {
  return DirectionalMaxMoment(joint.section, dir);
}

double DirectionalOnsetMoment(const SectionSpec& section, BendingDirection dir) {
  section.Validate();
  const double psi = dir.psi();
  // With h = -cos(theta - psi) and stress proportional to h - h_min, the
  // moment factor is  int (h - h_min) h / int (h - h_min)  over the set.
  double h_min = 1.0;
  double sum_h = 0.0;
  double sum_h2 = 0.0;
  double total_length = 0.0;
  for (const Arc& arc : TensionedArcs(section)) {
    if (ArcContains(arc, psi)) {
      h_min = -1.0;
    } else {
      h_min = std::min({h_min, Height(arc.lo, psi), Height(arc.hi, psi)});
    }
    const double a = arc.lo - psi;
    const double b = arc.hi - psi;
    sum_h += -(std::sin(b) - std::sin(a));
    sum_h2 += 0.5 * (b - a) + 0.25 * (std::sin(2.0 * b) - std::sin(2.0 * a));
    total_length += b - a;
  }
  const double factor =
      (sum_h2 - h_min * sum_h) / (sum_h - h_min * total_length);
  return IsotropicBucklingMoment(section) * std::max(0.0, factor);
}

double DirectionalOnsetMoment(const JointSpec& joint, BendingDirection dir) {
  return DirectionalOnsetMoment(joint.section, dir);
}

double RestoringMomentCurve(const JointSpec& joint, BendingDirection dir,
                            double angle) {
  joint.Validate();
  const double limit = RotationLimit(joint);
  if (!(angle >= 0.0 && angle <= limit * (1.0 + 1e-12))) {
    throw DomainError(kModule, "rotation angle " + std::to_string(angle) +
                                   " outside [0, " + std::to_string(limit) + "]");
  }
  const double m_max = std::max(0.0, DirectionalMaxMoment(joint, dir));
  const double m_onset = std::min(DirectionalOnsetMoment(joint, dir), m_max);
  const double k = joint.elastic_slope;
  const double onset_angle = m_onset / k;
  const double plateau_angle = joint.plateau_onset_angle;
  if (onset_angle >= plateau_angle) {
    throw DomainError(kModule,
                      "elastic slope too small: the onset moment is not "
                      "reached before the plateau onset angle");
  }
  if (angle <= onset_angle) return k * angle;
  if (angle >= plateau_angle) return m_max;

  // Hermite segment with end slope 0. A start slope above three times the
  // secant would overshoot, so it is capped there.
  const double h = plateau_angle - onset_angle;
  const double secant = (m_max - m_onset) / h;
  const double m0 = std::min(k, 3.0 * secant) * h;
  const double t = (angle - onset_angle) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  return h00 * m_onset + h10 * m0 + h01 * m_max;
}

}  // namespace irj
