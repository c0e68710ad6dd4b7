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

// Quasi-static simulation of joints connected in series and actuated by one
// tendon whose tension ramps up from zero.

#ifndef IRJ_CHAIN_SIM_HPP_
#define IRJ_CHAIN_SIM_HPP_

#include <cstddef>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "irj/joint_model.hpp"
#include "irj/tendon.hpp"

namespace irj {

struct Pose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();

  Eigen::Isometry3d ToIsometry() const;
  static Pose FromIsometry(const Eigen::Isometry3d& iso);

  bool operator==(const Pose& o) const {
    return position == o.position && orientation.coeffs() == o.orientation.coeffs();
  }
};

// Units in base-to-tip order. Unit k sits between plate k and plate k + 1;
// routes[k] gives its tendon anchors on those two plates, in plate
// coordinates (plates share the chain's x/y axes when the chain is straight).
struct ChainSpec {
  std::vector<JointSpec> units;
  std::vector<TendonRoute> routes;
  // Admissible anchor positions on a plate. Empty means unconstrained.
  std::vector<Eigen::Vector2d> orifice_layout;
  Pose base_frame;

  void Validate() const;
  bool operator==(const ChainSpec&) const = default;
};

struct JointState {
  double angle = 0.0;
  BendingDirection direction;

  bool operator==(const JointState&) const = default;
};

enum class FrameKind { kPlate, kHinge };

struct Frame {
  FrameKind kind = FrameKind::kPlate;
  std::size_t unit = 0;  // plate index for plates, unit index for hinges
  Pose pose;

  bool operator==(const Frame&) const = default;
};

// Each unit translates L/2 along its axis, rotates by its angle about the
// axis perpendicular to its bending direction (direction offset by the mount
// rotation), then translates another L/2. Returns plate 0, hinge 0, plate 1,
// ..., plate n. Throws DomainError naming the unit if an angle exceeds its
// rotation limit.
std::vector<Frame> ForwardKinematics(const ChainSpec& chain,
                                     const std::vector<JointState>& states);

enum class SimulationMode {
  kFull,         // thresholds recomputed from the current configuration
  kIndependent,  // thresholds from the undeformed configuration
};

struct SequenceEvent {
  std::size_t unit = 0;
  double threshold = 0.0;  // N, the unit's buckle tension when it went
  double tension = 0.0;    // N, ramp tension at the event (nondecreasing)
  BendingDirection direction;
  bool tie = false;        // another unit had an equal threshold
  std::vector<JointState> configuration;  // after the event

  bool operator==(const SequenceEvent&) const = default;
};

struct SequenceReport {
  SimulationMode mode = SimulationMode::kFull;
  double max_tension = 0.0;
  std::vector<SequenceEvent> events;
  std::vector<std::size_t> unreached;  // units still straight at max_tension
  std::vector<Frame> final_shape;

  bool operator==(const SequenceReport&) const = default;
};

// Thresholds within this relative gap count as tied; ties go to the lowest
// unit index.
inline constexpr double kTieTolerance = 1e-12;

SequenceReport SimulateRamp(const ChainSpec& chain, double max_tension,
                            SimulationMode mode = SimulationMode::kFull);

// Total tendon length along the anchors for a configuration.
double TendonLength(const ChainSpec& chain,
                    const std::vector<JointState>& states);

// Work done by the tendon over the ramp: per event, trapezoid between the
// event tension and the tension that holds the unit at its final angle,
// times the tendon shortening.
double GraspEnergy(const ChainSpec& chain, const SequenceReport& report);

}  // namespace irj

#endif  // IRJ_CHAIN_SIM_HPP_
