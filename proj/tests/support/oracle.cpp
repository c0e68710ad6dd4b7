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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace irj::oracle {

double Simpson(const std::function<double(double)>& fn, double a, double b,
               std::size_t panels) {
  if (panels == 0 || panels % 2 != 0) throw std::invalid_argument("panels must be even");
  const double h = (b - a) / double(panels);
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < panels; ++i) {
    (i % 2 ? odd : even) += fn(a + h * double(i));
  }
  return h / 3.0 * (fn(a) + fn(b) + 4.0 * odd + 2.0 * even);
}

double OracleMomentFromIntegrals(double pressure, double radius, double thickness,
                                 double theta0, double theta2) {
  const double c0 = std::cos(theta0);
  const auto shape = [c0](double th) { return (c0 - std::cos(th)) / (1.0 + c0); };
  // P pi R^2 = 2 t R sigma_M * int shape
  const double area = Simpson(shape, theta0, theta2);
  const double sigma_m = pressure * std::numbers::pi * radius / (2.0 * thickness * area);
  // M = -2 t R^2 * int sigma cos
  const double lever = Simpson([&](double th) { return shape(th) * std::cos(th); }, theta0,
                               theta2);
  return -2.0 * thickness * radius * radius * sigma_m * lever;
}

double OracleScaleFactor(double theta0, double theta2) {
  const double p = 1000.0, r = 0.05, t = 1e-4;
  return OracleMomentFromIntegrals(p, r, t, theta0, theta2) / (std::numbers::pi * p * r * r * r);
}

long double LiteralScaleFactor(long double a, long double b) {
  const long double num = std::sin(2 * a) + std::sin(2 * b) + 2 * (b - a) -
                          4 * std::cos(a) * std::sin(b);
  const long double den = 4 * ((b - a) * std::cos(a) - std::sin(b) + std::sin(a));
  return num / den;
}

double SampledDirectionalMax(const SectionSpec& section, double psi, std::size_t samples) {
  // Bending toward d compresses the film on the d side; the lever arm of a
  // tensioned point p is its distance behind the neutral axis, -(p . d).
  const double dx = std::cos(psi), dy = std::sin(psi);
  double best = -1.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double th =
        section.theta1 + section.band_width() * double(i) / double(samples - 1);
    for (double sign : {1.0, -1.0}) {
      const double px = std::cos(th), py = sign * std::sin(th);
      best = std::max(best, -(px * dx + py * dy));
    }
  }
  return IsotropicBucklingMoment(section) * best;
}

double ScannedThreshold(const JointSpec& joint, double soft, double stiff, std::size_t samples) {
  const double mag = std::hypot(soft, stiff);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const double psi = 2.0 * std::numbers::pi * double(i) / double(samples);
    const double drive = soft * std::cos(psi) + stiff * std::sin(psi);
    if (drive <= 1e-12 * mag) continue;
    best = std::min(best, DirectionalMaxMoment(joint, BendingDirection(psi)) / drive);
  }
  return best;
}

namespace {

double Gap(double a, double b) {
  const double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::fabs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

bool Feasible(const DesignProblem& problem, const DesignEncoding& e) {
  const std::size_t n = e.order.size();
  ChainSpec chain;
  chain.orifice_layout = problem.orifice_layout;
  for (std::size_t k = 0; k < n; ++k) {
    JointSpec unit = problem.available_units[e.order[k]];
    unit.mount_rotation = problem.allowed_rotations[e.rotations[k]];
    chain.units.push_back(unit);
    const Eigen::Vector2d lo = problem.orifice_layout[e.orifices[k]];
    const Eigen::Vector2d hi = problem.orifice_layout[e.orifices[k + 1]];
    chain.routes.push_back({{hi.x(), hi.y(), 0.0}, {lo.x(), lo.y(), 0.0}});
  }
  const SequenceReport report = SimulateRamp(chain, problem.max_tension, SimulationMode::kFull);
  if (report.events.size() != n) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t role = e.order[report.events[k].unit];
    if (role != problem.target_sequence[k]) return false;
    if (problem.target_directions.empty() || !problem.target_directions[role]) continue;
    const double actual = chain.units[report.events[k].unit].mount_rotation +
                          report.events[k].direction.psi();
    if (Gap(actual, *problem.target_directions[role]) > problem.direction_tolerance) {
      return false;
    }
  }
  return true;
}

// Calls visit(tuple) for every tuple in {0..radix-1}^length.
template <typename Visit>
void ForEachTuple(std::size_t length, std::size_t radix, Visit visit) {
  std::vector<std::size_t> t(length, 0);
  while (true) {
    visit(t);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++t[i] < radix) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

}  // namespace

std::vector<DesignEncoding> BruteForceFeasible(const DesignProblem& problem) {
  const std::size_t n = problem.available_units.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<DesignEncoding> out;
  do {
    ForEachTuple(n, problem.allowed_rotations.size(), [&](const auto& rot) {
      ForEachTuple(n + 1, problem.orifice_layout.size(), [&](const auto& orf) {
        DesignEncoding e{order, rot, orf};
        if (Feasible(problem, e)) out.push_back(std::move(e));
      });
    });
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace irj::oracle
