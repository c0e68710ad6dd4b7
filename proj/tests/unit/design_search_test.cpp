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

#include "irj/design_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace irj {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

JointSpec MakeJoint(double band_width) {
  JointSpec j;
  j.section = SectionSpec::Symmetric(0.0335, 50e-6, 6890.0, band_width);
  j.length = 0.06;
  j.wrinkle_strain = 0.333;
  j.elastic_slope = 20.0;
  j.plateau_onset_angle = 0.3;
  return j;
}

SequenceReport Tensions(const std::vector<double>& t) {
  SequenceReport r;
  for (double x : t) {
    SequenceEvent e;
    e.tension = x;
    r.events.push_back(e);
  }
  return r;
}

DesignProblem TwoUnitProblem(std::vector<std::size_t> target) {
  DesignProblem p;
  p.available_units = {MakeJoint(12.7e-3 / 0.0335), MakeJoint(38.1e-3 / 0.0335)};
  p.orifice_layout = {Eigen::Vector2d(0.02, 0.0)};
  p.target_sequence = std::move(target);
  return p;
}

DesignProblem ThreeUnitProblem() {
  DesignProblem p;
  p.available_units = {MakeJoint(0.5), MakeJoint(1.2), MakeJoint(2.0)};
  p.orifice_layout = {Eigen::Vector2d(0.02, 0.0), Eigen::Vector2d(0.0, 0.02),
                      Eigen::Vector2d(-0.014, 0.014)};
  p.allowed_rotations = {0.0, 0.5 * kPi};
  p.target_sequence = {0, 1, 2};
  p.target_directions = {std::nullopt, std::nullopt, 0.5 * kPi};
  return p;
}

TEST(Margin, Examples) {
  EXPECT_EQ(Margin(Tensions({5, 10})), 0.5);
  EXPECT_EQ(Margin(Tensions({7, 7})), 0.0);
  EXPECT_NEAR(Margin(Tensions({2, 3, 6})), 1.0 / 3.0, 1e-16);
  EXPECT_EQ(Margin(Tensions({4})), kInf);
  EXPECT_THROW(Margin(Tensions({})), DomainError);
}

TEST(EnumerateDesigns, SmallerBandFirstIsFeasible) {
  const auto solutions = EnumerateDesigns(TwoUnitProblem({0, 1}));
  // Either placement works: the order rule does not depend on position.
  ASSERT_EQ(solutions.size(), 2u);
  EXPECT_EQ(solutions[0].encoding.order, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(solutions[1].encoding.order, (std::vector<std::size_t>{1, 0}));
  for (const auto& s : solutions) EXPECT_NEAR(s.margin, 0.650104094563151, 1e-12);
}

TEST(EnumerateDesigns, LargerBandFirstIsInfeasibleWithEqualArms) {
  EXPECT_TRUE(EnumerateDesigns(TwoUnitProblem({1, 0})).empty());
}

TEST(EnumerateDesigns, SingleUnitHasInfiniteMargin) {
  DesignProblem p;
  p.available_units = {MakeJoint(kPi / 4)};
  p.orifice_layout = {Eigen::Vector2d(0.02, 0.0)};
  p.target_sequence = {0};
  const auto solutions = EnumerateDesigns(p);
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(solutions[0].margin, kInf);
}

TEST(EnumerateDesigns, CapExceededReportsSize) {
  DesignProblem p = ThreeUnitProblem();
  p.size_cap = 100;
  try {
    EnumerateDesigns(p);
    FAIL();
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.space_size(), 3888.0);
    EXPECT_EQ(e.kind(), "cap_exceeded");
  }
}

TEST(EnumerateDesigns, MatchesBruteForceExactly) {
  const DesignProblem p = ThreeUnitProblem();
  ASSERT_EQ(p.SpaceSize(), 3888.0);
  const auto solutions = EnumerateDesigns(p);
  std::vector<DesignEncoding> found;
  for (const auto& s : solutions) found.push_back(s.encoding);
  std::sort(found.begin(), found.end());
  const std::vector<DesignEncoding> brute = oracle::BruteForceFeasible(p);
  EXPECT_FALSE(brute.empty());
  EXPECT_EQ(found, brute);
}

TEST(EnumerateDesigns, SolutionsResimulateToTarget) {
  const DesignProblem p = ThreeUnitProblem();
  for (const auto& s : EnumerateDesigns(p)) {
    EXPECT_EQ(s.chain, BuildChain(p, s.encoding));
    const SequenceReport r = SimulateRamp(s.chain, p.max_tension, SimulationMode::kFull);
    EXPECT_TRUE(MatchesTarget(p, s.encoding, r));
    EXPECT_EQ(s.margin, Margin(r));
    EXPECT_GE(s.margin, 0.0);
  }
}

TEST(EnumerateDesigns, SortedAndIndependentOfExecution) {
  const DesignProblem p = ThreeUnitProblem();
  const auto parallel = EnumerateDesigns(p, Execution::kParallel);
  const auto serial = EnumerateDesigns(p, Execution::kSerial);
  EXPECT_EQ(parallel, serial);
  for (std::size_t i = 1; i < serial.size(); ++i) {
    const auto& a = serial[i - 1];
    const auto& b = serial[i];
    EXPECT_TRUE(a.margin > b.margin || (a.margin == b.margin && a.encoding < b.encoding));
  }
}

TEST(EnumerateDesigns, MaxTensionPrunes) {
  DesignProblem p = TwoUnitProblem({0, 1});
  const auto all = EnumerateDesigns(p);
  ASSERT_FALSE(all.empty());
  const SequenceReport r = SimulateRamp(all[0].chain, kInf);
  p.max_tension = 0.5 * (r.events[0].tension + r.events[1].tension);
  EXPECT_TRUE(EnumerateDesigns(p).empty());
}

TEST(DesignProblem, ValidateRejectsBadProblems) {
  DesignProblem p = TwoUnitProblem({0, 0});
  EXPECT_THROW(p.Validate(), DomainError);
  p = TwoUnitProblem({0});
  EXPECT_THROW(p.Validate(), DomainError);
  p = TwoUnitProblem({0, 1});
  p.orifice_layout = {Eigen::Vector2d(0.05, 0.0)};
  EXPECT_THROW(p.Validate(), DomainError);
  p = TwoUnitProblem({0, 1});
  p.allowed_rotations.clear();
  EXPECT_THROW(p.Validate(), DomainError);
}

}  // namespace
}  // namespace irj
