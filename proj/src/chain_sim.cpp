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

#include "irj/chain_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "irj/error.hpp"

namespace irj {
namespace {

constexpr const char* kModule = "chain_sim";

struct UnitFrames {
  Eigen::Isometry3d base;
  Eigen::Isometry3d hinge;
  Eigen::Vector3d hinge_axis;  // world frame
};

// Rotation axis that tips +z toward the bending direction, in the unit's
// base-plate frame.
Eigen::Vector3d BendAxis(const JointSpec& unit, BendingDirection dir) {
  const double a = unit.mount_rotation + dir.psi();
  return Eigen::Vector3d(-std::sin(a), std::cos(a), 0.0);
}

std::vector<UnitFrames> Compose(const ChainSpec& chain,
                                const std::vector<JointState>& states,
                                Eigen::Isometry3d* tip) {
  std::vector<UnitFrames> frames;
  frames.reserve(chain.units.size());
  Eigen::Isometry3d current = chain.base_frame.ToIsometry();
  for (std::size_t k = 0; k < chain.units.size(); ++k) {
    const JointSpec& unit = chain.units[k];
    const JointState& state = states[k];
    const Eigen::Vector3d half(0.0, 0.0, 0.5 * unit.length);
    const Eigen::Vector3d axis = BendAxis(unit, state.direction);
    UnitFrames f;
    f.base = current;
    f.hinge = current * Eigen::Translation3d(half);
    f.hinge_axis = current.linear() * axis;
    current = f.hinge * Eigen::AngleAxisd(state.angle, axis) *
              Eigen::Translation3d(half);
    frames.push_back(f);
  }
  if (tip) *tip = current;
  return frames;
}

void CheckStates(const ChainSpec& chain, const std::vector<JointState>& states) {
  if (states.size() != chain.units.size()) {
    throw DomainError(kModule, "expected one joint state per unit");
  }
  for (std::size_t k = 0; k < states.size(); ++k) {
    const double limit = RotationLimit(chain.units[k]);
    const double angle = states[k].angle;
    if (!(angle >= 0.0 && angle <= limit * (1.0 + 1e-12))) {
      throw DomainError(kModule, "unit " + std::to_string(k) + ": angle " +
                                     std::to_string(angle) +
                                     " outside its rotation limit [0, " +
                                     std::to_string(limit) + "]");
    }
  }
}


// World positions of each unit's bottom and top anchors.
struct AnchorPoints {
  Eigen::Vector3d bottom;
  Eigen::Vector3d top;
};

std::vector<AnchorPoints> WorldAnchors(const ChainSpec& chain,
                                       const std::vector<UnitFrames>& frames,
                                       const Eigen::Isometry3d& tip) {
  std::vector<AnchorPoints> out(chain.units.size());
  for (std::size_t k = 0; k < chain.units.size(); ++k) {
    const Eigen::Isometry3d& top_plate = k + 1 < frames.size() ? frames[k + 1].base : tip;
    out[k].bottom = frames[k].base * chain.routes[k].bottom_anchor;
    out[k].top = top_plate * chain.routes[k].top_anchor;
  }
  return out;
}

}  // namespace

Eigen::Isometry3d Pose::ToIsometry() const {
  Eigen::Isometry3d iso = Eigen::Isometry3d::Identity();
  iso.linear() = orientation.normalized().toRotationMatrix();
  iso.translation() = position;
  return iso;
}

Pose Pose::FromIsometry(const Eigen::Isometry3d& iso) {
  Pose p;
  p.position = iso.translation();
  p.orientation = Eigen::Quaterniond(iso.linear());
  if (p.orientation.w() < 0.0) p.orientation.coeffs() *= -1.0;
  return p;
}

void ChainSpec::Validate() const {
  if (units.empty()) throw DomainError(kModule, "chain needs at least one unit");
  if (routes.size() != units.size()) {
    throw DomainError(kModule, "chain needs exactly one route per unit");
  }
  for (std::size_t k = 0; k < units.size(); ++k) {
    units[k].Validate();
    ValidateRoute(units[k], routes[k]);
    if (orifice_layout.empty()) continue;
    auto on_orifice = [&](const Eigen::Vector3d& anchor) {
      return std::any_of(orifice_layout.begin(), orifice_layout.end(),
                         [&](const Eigen::Vector2d& o) {
                           return (anchor.head<2>() - o).norm() <= 1e-9;
                         });
    };
    if (!on_orifice(routes[k].bottom_anchor) || !on_orifice(routes[k].top_anchor)) {
      throw DomainError(kModule, "unit " + std::to_string(k) +
                                     ": tendon anchor is not on a declared orifice");
    }
  }
}

std::vector<Frame> ForwardKinematics(const ChainSpec& chain,
                                     const std::vector<JointState>& states) {
  CheckStates(chain, states);
  Eigen::Isometry3d tip;
  const std::vector<UnitFrames> frames = Compose(chain, states, &tip);
  std::vector<Frame> out;
  out.reserve(2 * frames.size() + 1);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    out.push_back(Frame{FrameKind::kPlate, k, Pose::FromIsometry(frames[k].base)});
    out.push_back(Frame{FrameKind::kHinge, k, Pose::FromIsometry(frames[k].hinge)});
  }
  out.push_back(Frame{FrameKind::kPlate, frames.size(), Pose::FromIsometry(tip)});
  return out;
}

double TendonLength(const ChainSpec& chain, const std::vector<JointState>& states) {
  CheckStates(chain, states);
  Eigen::Isometry3d tip;
  const auto frames = Compose(chain, states, &tip);
  const auto anchors = WorldAnchors(chain, frames, tip);
  double length = 0.0;
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    length += (anchors[k].top - anchors[k].bottom).norm();
    if (k + 1 < anchors.size()) {
      length += (anchors[k + 1].bottom - anchors[k].top).norm();
    }
  }
  return length;
}

SequenceReport SimulateRamp(const ChainSpec& chain, double max_tension,
                            SimulationMode mode) {
  chain.Validate();
  if (!(max_tension > 0.0)) {
    throw DomainError(kModule, "max tension must be positive");
  }
  const std::size_t n = chain.units.size();
  SequenceReport report;
  report.mode = mode;
  report.max_tension = max_tension;

  std::vector<JointState> states(n);
  std::vector<bool> buckled(n, false);
  std::vector<BuckleThreshold> thresholds(n);

  auto compute_thresholds = [&]() {
    Eigen::Isometry3d tip;
    const auto frames = Compose(chain, states, &tip);
    const auto anchors = WorldAnchors(chain, frames, tip);
    for (std::size_t k = 0; k < n; ++k) {
      if (buckled[k]) continue;
      // Line of action in unit k's base-plate frame.
      const Eigen::Isometry3d to_local = frames[k].base.inverse();
      const UnitMoment m = UnitTensionMoment(chain.units[k], to_local * anchors[k].bottom,
                                             to_local * anchors[k].top);
      thresholds[k] = ComputeBuckleThreshold(chain.units[k], m);
    }
  };

  compute_thresholds();
  double ramp = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    if (mode == SimulationMode::kFull && step > 0) compute_thresholds();

    double t_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (!buckled[k] && thresholds[k].reachable) t_min = std::min(t_min, thresholds[k].tension);
    }
    if (!std::isfinite(t_min)) break;
    // Lowest index among the units tied with the minimum.
    std::size_t next = n;
    std::size_t tied = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (buckled[k] || !thresholds[k].reachable) continue;
      if (thresholds[k].tension <= t_min * (1.0 + kTieTolerance)) {
        if (next == n) next = k;
        ++tied;
      }
    }
    const double t_next = thresholds[next].tension;
    if (std::max(t_next, ramp) > max_tension) break;

    ramp = std::max(ramp, t_next);
    buckled[next] = true;
    states[next] = JointState{RotationLimit(chain.units[next]), thresholds[next].direction};
    report.events.push_back(SequenceEvent{next, t_next, ramp, thresholds[next].direction,
                                          tied > 1, states});
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (!buckled[k]) report.unreached.push_back(k);
  }
  report.final_shape = ForwardKinematics(chain, states);
  return report;
}

double GraspEnergy(const ChainSpec& chain, const SequenceReport& report) {
  chain.Validate();
  const std::size_t n = chain.units.size();
  std::vector<JointState> before(n);
  double energy = 0.0;
  for (const SequenceEvent& event : report.events) {
    if (event.unit >= n || event.configuration.size() != n) {
      throw DomainError(kModule, "report does not belong to this chain");
    }
    const std::vector<JointState>& after = event.configuration;
    const double shortening = TendonLength(chain, before) - TendonLength(chain, after);

    // Tension holding the unit on its plateau at the final angle: plateau
    // moment over the tendon's lever arm about the hinge.
    Eigen::Isometry3d tip;
    const auto frames = Compose(chain, after, &tip);
    const auto anchors = WorldAnchors(chain, frames, tip);
    const UnitFrames& f = frames[event.unit];
    const AnchorPoints& a = anchors[event.unit];
    const Eigen::Vector3d pull = (a.bottom - a.top).normalized();
    const double arm = (a.top - f.hinge.translation()).cross(pull).dot(f.hinge_axis);
    double holding = event.tension;
    if (arm > 0.0) {
      holding = DirectionalMaxMoment(chain.units[event.unit], event.direction) / arm;
    }
    energy += 0.5 * (event.tension + holding) * shortening;
    before = after;
  }
  return energy;
}

}  // namespace irj
