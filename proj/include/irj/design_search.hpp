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

// Exhaustive search over discrete chain designs (unit order, mount rotation
// per position, tendon orifice per plate) for chains whose ramp reproduces a
// target actuation sequence.

#ifndef IRJ_DESIGN_SEARCH_HPP_
#define IRJ_DESIGN_SEARCH_HPP_

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "irj/chain_sim.hpp"
#include "irj/error.hpp"
#include "irj/execution.hpp"

namespace irj {

struct DesignProblem {
  // Unit roles; index r is role r. Mount rotations in these specs are ignored.
  std::vector<JointSpec> available_units;
  std::vector<Eigen::Vector2d> orifice_layout;
  // Roles in the order they must buckle.
  std::vector<std::size_t> target_sequence;
  // Optional per-role bending direction in plate coordinates (mount rotation
  // plus the unit's own bending direction), matched within
  // direction_tolerance.
  std::vector<std::optional<double>> target_directions;
  double direction_tolerance = std::numbers::pi / 12.0;
  std::vector<double> allowed_rotations{0.0};
  double max_tension = std::numeric_limits<double>::infinity();
  double size_cap = 1e7;

  void Validate() const;
  // Candidates in the product space; may exceed size_t, hence double.
  double SpaceSize() const;

  bool operator==(const DesignProblem&) const = default;
};

// position -> role, position -> rotation index, plate -> orifice index.
struct DesignEncoding {
  std::vector<std::size_t> order;
  std::vector<std::size_t> rotations;
  std::vector<std::size_t> orifices;

  auto operator<=>(const DesignEncoding&) const = default;
  bool operator==(const DesignEncoding&) const = default;
};

struct DesignSolution {
  DesignEncoding encoding;
  ChainSpec chain;
  double margin = 0.0;  // +inf for a single unit

  bool operator==(const DesignSolution&) const = default;
};

class CapExceededError : public DomainError {
 public:
  CapExceededError(double space_size, double cap);
  double space_size() const { return space_size_; }

 private:
  double space_size_;
};

ChainSpec BuildChain(const DesignProblem& problem, const DesignEncoding& design);

// True if the report buckles every unit, in the target role order, with the
// target directions.
bool MatchesTarget(const DesignProblem& problem, const DesignEncoding& design,
                   const SequenceReport& report);

// min over consecutive events of (T[k+1] - T[k]) / T[k+1]; +inf for a single
// event. Throws DomainError on an empty report.
double Margin(const SequenceReport& report);

// All feasible designs, by descending margin, ties by encoding.
std::vector<DesignSolution> EnumerateDesigns(const DesignProblem& problem,
                                             Execution exec = Execution::kParallel);

}  // namespace irj

#endif  // IRJ_DESIGN_SEARCH_HPP_
