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
#include <exception>
#include <numeric>
#include <string>

namespace irj {
namespace {

constexpr const char* kModule = "design_search";
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double AngularGap(double a, double b) {
  double d = std::fmod(std::fabs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

// Per-unit thresholds in the straight chain only depend on the unit's role,
// its mount rotation and the two orifices it spans.
class ThresholdTable {
 public:
  explicit ThresholdTable(const DesignProblem& p)
      : n_rot_(p.allowed_rotations.size()), n_orf_(p.orifice_layout.size()) {
    table_.resize(p.available_units.size() * n_rot_ * n_orf_ * n_orf_);
    for (std::size_t r = 0; r < p.available_units.size(); ++r) {
      for (std::size_t q = 0; q < n_rot_; ++q) {
        JointSpec unit = p.available_units[r];
        unit.mount_rotation = p.allowed_rotations[q];
        for (std::size_t i = 0; i < n_orf_; ++i) {
          for (std::size_t j = 0; j < n_orf_; ++j) {
            const Eigen::Vector2d& b = p.orifice_layout[i];
            const Eigen::Vector2d& t = p.orifice_layout[j];
            TendonRoute route{Eigen::Vector3d(t.x(), t.y(), 0.0),
                              Eigen::Vector3d(b.x(), b.y(), 0.0)};
            table_[Index(r, q, i, j)] = ComputeBuckleThreshold(unit, route);
          }
        }
      }
    }
  }

  const BuckleThreshold& at(std::size_t role, std::size_t rot, std::size_t bottom,
                            std::size_t top) const {
    return table_[Index(role, rot, bottom, top)];
  }

 private:
  std::size_t Index(std::size_t r, std::size_t q, std::size_t i, std::size_t j) const {
    return ((r * n_rot_ + q) * n_orf_ + i) * n_orf_ + j;
  }

  std::size_t n_rot_;
  std::size_t n_orf_;
  std::vector<BuckleThreshold> table_;
};

// Mixed-radix decoding of a flat candidate index; digits are most
// significant first so index order is lexicographic encoding order.
class DesignSpace {
 public:
  explicit DesignSpace(const DesignProblem& p)
      : n_(p.available_units.size()),
        n_rot_(p.allowed_rotations.size()),
        n_orf_(p.orifice_layout.size()) {
    std::vector<std::size_t> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    per_perm_ = 1;
    for (std::size_t k = 0; k < n_; ++k) per_perm_ *= n_rot_;
    for (std::size_t k = 0; k <= n_; ++k) per_perm_ *= n_orf_;
  }

  std::size_t size() const { return perms_.size() * per_perm_; }

  void Decode(std::size_t index, DesignEncoding* d) const {
    d->order = perms_[index / per_perm_];
    std::size_t rem = index % per_perm_;
    d->orifices.resize(n_ + 1);
    for (std::size_t k = n_ + 1; k-- > 0;) {
      d->orifices[k] = rem % n_orf_;
      rem /= n_orf_;
    }
    d->rotations.resize(n_);
    for (std::size_t k = n_; k-- > 0;) {
      d->rotations[k] = rem % n_rot_;
      rem /= n_rot_;
    }
  }

 private:
  std::size_t n_;
  std::size_t n_rot_;
  std::size_t n_orf_;
  std::size_t per_perm_ = 1;
  std::vector<std::vector<std::size_t>> perms_;
};

// Straight-chain screening, mirroring SimulateRamp's selection rule.
bool PassesScreen(const DesignProblem& p, const ThresholdTable& table,
                  const DesignEncoding& d, std::vector<std::size_t>* scratch) {
  const std::size_t n = d.order.size();
  std::vector<std::size_t>& positions = *scratch;
  positions.resize(n);
  std::iota(positions.begin(), positions.end(), 0);
  auto threshold = [&](std::size_t pos) -> const BuckleThreshold& {
    return table.at(d.order[pos], d.rotations[pos], d.orifices[pos], d.orifices[pos + 1]);
  };
  for (std::size_t pos = 0; pos < n; ++pos) {
    const BuckleThreshold& t = threshold(pos);
    if (!t.reachable || t.tension > p.max_tension) return false;
  }
  // Same selection rule as SimulateRamp: lowest index among tied minima.
  std::vector<std::size_t>& remaining = positions;
  for (std::size_t k = 0; k < n; ++k) {
    double t_min = std::numeric_limits<double>::infinity();
    for (std::size_t pos : remaining) t_min = std::min(t_min, threshold(pos).tension);
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](std::size_t pos) {
      return threshold(pos).tension <= t_min * (1.0 + kTieTolerance);
    });
    if (d.order[*it] != p.target_sequence[k]) return false;
    remaining.erase(it);
  }
  if (!p.target_directions.empty()) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      const auto& target = p.target_directions[d.order[pos]];
      if (!target) continue;
      const double actual =
          p.allowed_rotations[d.rotations[pos]] + threshold(pos).direction.psi();
      if (AngularGap(actual, *target) > p.direction_tolerance) return false;
    }
  }
  return true;
}

}  // namespace

CapExceededError::CapExceededError(double space_size, double cap)
    : DomainError(kModule,
                  "design space has " + std::to_string(space_size) +
                      " candidates, above the cap of " + std::to_string(cap),
                  "cap_exceeded"),
      space_size_(space_size) {}

void DesignProblem::Validate() const {
  const std::size_t n = available_units.size();
  if (n == 0) throw DomainError(kModule, "problem needs at least one unit");
  for (const JointSpec& unit : available_units) unit.Validate();
  if (orifice_layout.empty()) throw DomainError(kModule, "orifice layout is empty");
  if (allowed_rotations.empty()) {
    throw DomainError(kModule, "allowed rotation set is empty");
  }
  if (target_sequence.size() != n) {
    throw DomainError(kModule, "target sequence length must equal the unit count");
  }
  std::vector<std::size_t> sorted = target_sequence;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < n; ++k) {
    if (sorted[k] != k) {
      throw DomainError(kModule, "target sequence must be a permutation of unit roles");
    }
  }
  if (!target_directions.empty() && target_directions.size() != n) {
    throw DomainError(kModule, "target directions must be empty or one per unit");
  }
  if (!(direction_tolerance >= 0.0)) {
    throw DomainError(kModule, "direction tolerance must be nonnegative");
  }
  if (!(max_tension > 0.0)) throw DomainError(kModule, "max tension must be positive");
  for (const JointSpec& unit : available_units) {
    for (const Eigen::Vector2d& o : orifice_layout) {
      if (o.norm() > unit.section.radius * (1.0 + 1e-12)) {
        throw DomainError(kModule, "orifice lies outside a unit's membrane radius");
      }
    }
  }
}

double DesignProblem::SpaceSize() const {
  const double n = static_cast<double>(available_units.size());
  return std::tgamma(n + 1.0) *
         std::pow(static_cast<double>(allowed_rotations.size()), n) *
         std::pow(static_cast<double>(orifice_layout.size()), n + 1.0);
}

ChainSpec BuildChain(const DesignProblem& problem, const DesignEncoding& design) {
  const std::size_t n = design.order.size();
  ChainSpec chain;
  chain.orifice_layout = problem.orifice_layout;
  chain.units.reserve(n);
  chain.routes.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    JointSpec unit = problem.available_units.at(design.order[pos]);
    unit.mount_rotation = problem.allowed_rotations.at(design.rotations[pos]);
    chain.units.push_back(unit);
    const Eigen::Vector2d& b = problem.orifice_layout.at(design.orifices[pos]);
    const Eigen::Vector2d& t = problem.orifice_layout.at(design.orifices[pos + 1]);
    chain.routes.push_back(TendonRoute{Eigen::Vector3d(t.x(), t.y(), 0.0),
                                       Eigen::Vector3d(b.x(), b.y(), 0.0)});
  }
  return chain;
}

bool MatchesTarget(const DesignProblem& problem, const DesignEncoding& design,
                   const SequenceReport& report) {
  const std::size_t n = design.order.size();
  if (report.events.size() != n || !report.unreached.empty()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const SequenceEvent& e = report.events[k];
    if (design.order[e.unit] != problem.target_sequence[k]) return false;
    if (!problem.target_directions.empty()) {
      const auto& target = problem.target_directions[design.order[e.unit]];
      if (!target) continue;
      const double actual =
          problem.allowed_rotations[design.rotations[e.unit]] + e.direction.psi();
      if (AngularGap(actual, *target) > problem.direction_tolerance) return false;
    }
  }
  return true;
}

double Margin(const SequenceReport& report) {
  if (report.events.empty()) {
    throw DomainError(kModule, "margin of an empty sequence report");
  }
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < report.events.size(); ++k) {
    const double lo = report.events[k].tension;
    const double hi = report.events[k + 1].tension;
    margin = std::min(margin, hi > 0.0 ? (hi - lo) / hi : 0.0);
  }
  return margin;
}

std::vector<DesignSolution> EnumerateDesigns(const DesignProblem& problem,
                                             Execution exec) {
  problem.Validate();
  const double size = problem.SpaceSize();
  if (size > problem.size_cap) throw CapExceededError(size, problem.size_cap);

  const ThresholdTable table(problem);
  const DesignSpace space(problem);
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(space.size());

  std::vector<DesignSolution> solutions;
  std::exception_ptr failure;

  auto finalize = [&](const DesignEncoding& d, std::vector<DesignSolution>* out) {
    ChainSpec chain = BuildChain(problem, d);
    const SequenceReport report =
        SimulateRamp(chain, problem.max_tension, SimulationMode::kFull);
    if (!MatchesTarget(problem, d, report)) return;
    out->push_back(DesignSolution{d, std::move(chain), Margin(report)});
  };

  if (exec == Execution::kParallel) {
#pragma omp parallel
    {
      std::vector<DesignSolution> local;
      DesignEncoding d;
      std::vector<std::size_t> scratch;
#pragma omp for schedule(dynamic, 1024) nowait
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
          space.Decode(static_cast<std::size_t>(i), &d);
          if (PassesScreen(problem, table, d, &scratch)) finalize(d, &local);
        } catch (...) {
#pragma omp critical(irj_design_failure)
          if (!failure) failure = std::current_exception();
        }
      }
#pragma omp critical(irj_design_merge)
      solutions.insert(solutions.end(), std::make_move_iterator(local.begin()),
                       std::make_move_iterator(local.end()));
    }
  } else {
    DesignEncoding d;
    std::vector<std::size_t> scratch;
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      space.Decode(static_cast<std::size_t>(i), &d);
      if (PassesScreen(problem, table, d, &scratch)) finalize(d, &solutions);
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(solutions.begin(), solutions.end(),
            [](const DesignSolution& a, const DesignSolution& b) {
              if (a.margin != b.margin) return a.margin > b.margin;
              return a.encoding < b.encoding;
            });
  return solutions;
}

}  // namespace irj
