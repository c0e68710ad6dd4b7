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

// A complete inflated rotational joint: a partially wrinkled section of
// finite length with a rotation limit, a direction-dependent restoring moment
// and a moment-rotation law.
//
// Section-plane convention: x is the soft bending direction (through the
// enforced wrinkles), y the stiff one (through the tensioned bands). A point
// on the film at section angle theta sits at R (cos theta, sin theta); the
// tensioned set is [theta1, theta2] together with its mirror [-theta2,
// -theta1].

#ifndef IRJ_JOINT_MODEL_HPP_
#define IRJ_JOINT_MODEL_HPP_

#include <optional>

#include "irj/section_mechanics.hpp"

namespace irj {

// Direction the joint bends toward, measured in the section plane from the
// soft bending direction. Normalised to [0, 2 pi).
class BendingDirection {
 public:
  BendingDirection() = default;
  explicit BendingDirection(double psi);

  static BendingDirection Soft() { return BendingDirection(0.0); }
  static BendingDirection Stiff() { return BendingDirection(0.5 * std::numbers::pi); }

  double psi() const { return psi_; }

  // Unsigned angular distance to the soft plane (either sense), in [0, pi/2].
  double DistanceToSoftPlane() const;

  bool operator==(const BendingDirection&) const = default;

 private:
  double psi_ = 0.0;
};

struct JointSpec {
  SectionSpec section;
  double length = 0.0;               // m
  double wrinkle_strain = 0.0;       // surface strain of the enforced wrinkles
  double elastic_slope = 0.0;        // N m / rad at section.pressure
  double plateau_onset_angle = 0.0;  // rad
  double mount_rotation = 0.0;       // rad, soft axis relative to plate x axis
  std::optional<double> rotation_limit_override;

  void Validate() const;

  // Same joint at another pressure. The elastic slope scales with pressure
  // together with the section moments.
  JointSpec WithPressure(double pressure) const;

  bool operator==(const JointSpec&) const = default;
};

// strain * length / radius: rotation at which the excess film on the
// wrinkled side is used up, pivoting about the tensioned band.
double RotationLimit(double wrinkle_strain, double length, double radius);
double RotationLimit(const JointSpec& joint);

// pi P R^3 times the largest distance of any tensioned point from the
// neutral axis for bending toward `dir`.
double DirectionalMaxMoment(const SectionSpec& section, BendingDirection dir);
double DirectionalMaxMoment(const JointSpec& joint, BendingDirection dir);

// Moment at which the first tensioned point loses its tension under a
// linear stress profile in direction `dir`. Reduces to WrinkleOnsetMoment
// for the soft plane. Clamped to be nonnegative.
double DirectionalOnsetMoment(const SectionSpec& section, BendingDirection dir);
double DirectionalOnsetMoment(const JointSpec& joint, BendingDirection dir);

// Moment-rotation law: slope elastic_slope up to the onset moment, cubic
// Hermite hardening up to the directional maximum at plateau_onset_angle,
// then a flat plateau. Throws DomainError outside [0, RotationLimit].
double RestoringMomentCurve(const JointSpec& joint, BendingDirection dir,
                            double angle);

}  // namespace irj

#endif  // IRJ_JOINT_MODEL_HPP_
