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

// Tendon actuation of a single joint: line-of-action geometry, the moment a
// unit tension produces at the base section, and the tension at which the
// joint buckles together with the direction it buckles in.

#ifndef IRJ_TENDON_HPP_
#define IRJ_TENDON_HPP_

#include <limits>
#include <vector>

#include <Eigen/Core>

#include "irj/execution.hpp"
#include "irj/joint_model.hpp"

namespace irj {

// Anchor points in plate coordinates: (x, y) in the plate plane, z the
// standoff above the plate. The bottom plate is the joint's base section;
// the top plate sits at z = length.
struct TendonRoute {
  Eigen::Vector3d top_anchor = Eigen::Vector3d::Zero();
  Eigen::Vector3d bottom_anchor = Eigen::Vector3d::Zero();

  bool operator==(const TendonRoute& o) const {
    return top_anchor == o.top_anchor && bottom_anchor == o.bottom_anchor;
  }
};

// Throws DomainError if an anchor lies outside the membrane radius.
void ValidateRoute(const JointSpec& joint, const TendonRoute& route);

// Moment about the base-section centre per newton of tendon tension, split
// into the component that bends the joint in its soft plane and the one that
// bends it in its stiff plane.
struct UnitMoment {
  double soft = 0.0;   // m
  double stiff = 0.0;  // m

  double magnitude() const;
  // Bending direction the moment drives, relative to the soft plane.
  BendingDirection direction() const;
};

UnitMoment UnitTensionMoment(const JointSpec& joint, const TendonRoute& route);

// Same, for a line of action given by two points in the joint's base-plate
// frame (before the mount rotation is removed). `top_point` is the end the
// tendon pulls from.
UnitMoment UnitTensionMoment(const JointSpec& joint,
                             const Eigen::Vector3d& bottom_point,
                             const Eigen::Vector3d& top_point);

struct BuckleThreshold {
  double tension = std::numeric_limits<double>::infinity();  // N
  BendingDirection direction;
  bool reachable = false;

  bool operator==(const BuckleThreshold&) const = default;
};

// min over psi of DirectionalMaxMoment(psi) / (unit moment component toward
// psi). Unreachable when the route produces no moment.
BuckleThreshold ComputeBuckleThreshold(const JointSpec& joint,
                                       const UnitMoment& moment);
BuckleThreshold ComputeBuckleThreshold(const JointSpec& joint,
                                       const TendonRoute& route);

// Anchor on a circle of `radius` in the plate plane at `angle` from plate x.
Eigen::Vector3d AnchorOnCircle(double radius, double angle);

struct SweepEntry {
  double top_angle = 0.0;
  double bottom_angle = 0.0;
  BuckleThreshold threshold;
};

// Thresholds over the Cartesian grid of anchor angles, top-major order.
std::vector<SweepEntry> RoutingSweep(const JointSpec& joint,
                                     const std::vector<double>& top_angles,
                                     const std::vector<double>& bottom_angles,
                                     double anchor_radius,
                                     Execution exec = Execution::kParallel);

}  // namespace irj

#endif  // IRJ_TENDON_HPP_
