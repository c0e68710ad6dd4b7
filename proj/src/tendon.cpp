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

#include "irj/tendon.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include <Eigen/Geometry>

#include "irj/error.hpp"

namespace irj {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kDegree = std::numbers::pi / 180.0;
constexpr const char* kModule = "tendon";

// Tension needed to buckle toward psi, given a moment of `magnitude` toward
// `moment_psi`; +inf where the moment has no component toward psi.
double TensionToward(const JointSpec& joint, double magnitude, double moment_psi,
                     double psi) {
  const double c = magnitude * std::cos(psi - moment_psi);
  if (c <= 0.0) return std::numeric_limits<double>::infinity();
  return DirectionalMaxMoment(joint, BendingDirection(psi)) / c;
}

}  // namespace

void ValidateRoute(const JointSpec& joint, const TendonRoute& route) {
  const double r = joint.section.radius * (1.0 + 1e-12);
  if (route.top_anchor.head<2>().norm() > r ||
      route.bottom_anchor.head<2>().norm() > r) {
    throw DomainError(kModule, "tendon anchor lies outside the membrane radius");
  }
}

double UnitMoment::magnitude() const { return std::hypot(soft, stiff); }

BendingDirection UnitMoment::direction() const {
  return BendingDirection(std::atan2(stiff, soft));
}

UnitMoment UnitTensionMoment(const JointSpec& joint,
                             const Eigen::Vector3d& bottom_point,
                             const Eigen::Vector3d& top_point) {
  const Eigen::Vector3d span = bottom_point - top_point;
  const double length = span.norm();
  if (!(length > 1e-12)) {
    throw DomainError(kModule, "degenerate tendon route: anchors coincide");
  }
  // Force on the part above the base section pulls from the top anchor
  // toward the bottom anchor.
  const Eigen::Vector3d moment = top_point.cross(span / length);
  // Bending direction of an in-plane moment m is (m_y, -m_x).
  const Eigen::Vector2d bend(moment.y(), -moment.x());
  const Eigen::Vector2d local =
      Eigen::Rotation2Dd(-joint.mount_rotation) * bend;
  return UnitMoment{local.x(), local.y()};
}

UnitMoment UnitTensionMoment(const JointSpec& joint, const TendonRoute& route) {
  ValidateRoute(joint, route);
  const Eigen::Vector3d top =
      route.top_anchor + Eigen::Vector3d(0.0, 0.0, joint.length);
  return UnitTensionMoment(joint, route.bottom_anchor, top);
}

BuckleThreshold ComputeBuckleThreshold(const JointSpec& joint,
                                       const UnitMoment& moment) {
  const double magnitude = moment.magnitude();
  if (!(magnitude > 1e-15 * joint.section.radius)) return BuckleThreshold{};
  const double moment_psi = std::atan2(moment.stiff, moment.soft);
  auto objective = [&](double psi) {
    return TensionToward(joint, magnitude, moment_psi, psi);
  };

  // Coarse 1 degree scan of the half plane the moment acts in.
  double best_psi = moment_psi;
  double best = objective(moment_psi);
  for (int k = -89; k <= 89; ++k) {
    const double psi = moment_psi + k * kDegree;
    const double value = objective(psi);
    if (value < best) {
      best = value;
      best_psi = psi;
    }
  }

  // Golden-section refinement on the bracketing cells.
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = std::max(best_psi - kDegree, moment_psi - kHalfPi);
  double hi = std::min(best_psi + kDegree, moment_psi + kHalfPi);
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double refined = 0.5 * (lo + hi);
  const double refined_value = objective(refined);
  if (refined_value < best) {
    best = refined_value;
    best_psi = refined;
  }

  // The directional maximum has kinks where its maximiser jumps between
  // band edges; the minimum usually sits on one, so test them exactly.
  const SectionSpec& s = joint.section;
  const double kinks[] = {0.0,           kHalfPi,           kPi,
                          -kHalfPi,      s.theta1,          -s.theta1,
                          s.theta2,      -s.theta2,         s.theta1 + kPi,
                          kPi - s.theta1, s.theta2 + kPi,   kPi - s.theta2};
  for (double psi : kinks) {
    const double value = objective(psi);
    if (value < best) {
      best = value;
      best_psi = psi;
    }
  }

  if (!std::isfinite(best)) return BuckleThreshold{};
  return BuckleThreshold{best, BendingDirection(best_psi), true};
}

BuckleThreshold ComputeBuckleThreshold(const JointSpec& joint,
                                       const TendonRoute& route) {
  return ComputeBuckleThreshold(joint, UnitTensionMoment(joint, route));
}

Eigen::Vector3d AnchorOnCircle(double radius, double angle) {
  return Eigen::Vector3d(radius * std::cos(angle), radius * std::sin(angle),
                         0.0);
}

std::vector<SweepEntry> RoutingSweep(const JointSpec& joint,
                                     const std::vector<double>& top_angles,
                                     const std::vector<double>& bottom_angles,
                                     double anchor_radius, Execution exec) {
  if (top_angles.empty() || bottom_angles.empty()) {
    throw DomainError(kModule, "routing sweep needs nonempty angle grids");
  }
  if (!(anchor_radius >= 0.0 && anchor_radius <= joint.section.radius)) {
    throw DomainError(kModule, "anchor radius must lie in [0, R]");
  }
  joint.Validate();

  const std::ptrdiff_t n_bottom = static_cast<std::ptrdiff_t>(bottom_angles.size());
  const std::ptrdiff_t n =
      static_cast<std::ptrdiff_t>(top_angles.size()) * n_bottom;
  std::vector<SweepEntry> table(static_cast<std::size_t>(n));

  auto evaluate = [&](std::ptrdiff_t i) {
    const double top = top_angles[static_cast<std::size_t>(i / n_bottom)];
    const double bottom = bottom_angles[static_cast<std::size_t>(i % n_bottom)];
    TendonRoute route{AnchorOnCircle(anchor_radius, top),
                      AnchorOnCircle(anchor_radius, bottom)};
    table[static_cast<std::size_t>(i)] =
        SweepEntry{top, bottom, ComputeBuckleThreshold(joint, route)};
  };

  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) evaluate(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) evaluate(i);
  }
  return table;
}

}  // namespace irj
