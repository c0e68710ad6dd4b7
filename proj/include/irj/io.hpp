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

// File formats: JSON spec documents and reports, plot-ready CSV.
//
// All files use SI units (m, Pa, N, rad). Numbers are written in their
// shortest round-trip form with a dot decimal separator regardless of locale.
// The JSON schema is described in docs/schema.md.

#ifndef IRJ_IO_HPP_
#define IRJ_IO_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "irj/chain_sim.hpp"
#include "irj/data_reduction.hpp"
#include "irj/design_search.hpp"
#include "irj/joint_model.hpp"
#include "irj/section_mechanics.hpp"
#include "irj/tendon.hpp"

namespace irj::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Named collections. Joints may reference sections by name; chains and
// problems may reference joints and routes by name.
struct SpecDocument {
  int schema_version = kSchemaVersion;
  std::map<std::string, SectionSpec> sections;
  std::map<std::string, JointSpec> joints;
  std::map<std::string, TendonRoute> routes;
  std::map<std::string, ChainSpec> chains;
  std::map<std::string, DesignProblem> problems;

  bool operator==(const SpecDocument&) const = default;
};

SpecDocument ParseSpecDocument(const Json& j);
SpecDocument LoadSpecDocument(const std::string& path);
Json ToJson(const SpecDocument& doc);

Json ToJson(const SectionSpec& s);
Json ToJson(const JointSpec& joint);
Json ToJson(const TendonRoute& route);
Json ToJson(const ChainSpec& chain);
Json ToJson(const DesignProblem& problem);
Json ToJson(const BuckleThreshold& threshold);
Json ToJson(const SequenceReport& report);
Json ToJson(const DesignSolution& solution);
Json ToJson(const std::vector<DesignSolution>& solutions);
Json ToJson(const PlateauEstimate& plateau);
Json ToJson(const PressureFit& fit);

// `doc` resolves name references; it may be null when none are used.
SectionSpec SectionFromJson(const Json& j);
JointSpec JointFromJson(const Json& j, const SpecDocument* doc = nullptr);
TendonRoute RouteFromJson(const Json& j);
ChainSpec ChainFromJson(const Json& j, const SpecDocument* doc = nullptr);
DesignProblem ProblemFromJson(const Json& j, const SpecDocument* doc = nullptr);
SequenceReport ReportFromJson(const Json& j);
DesignSolution SolutionFromJson(const Json& j);
std::vector<DesignSolution> SolutionsFromJson(const Json& j);

Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

std::string FormatNumber(double value);

void WriteCsv(std::ostream& os, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows);
// index,kind,unit,x,y,z,qw,qx,qy,qz
void WriteShapeCsv(std::ostream& os, const std::vector<Frame>& frames);
// top_angle_rad,bottom_angle_rad,tension_N,direction_rad,reachable
void WriteSweepCsv(std::ostream& os, const std::vector<SweepEntry>& table);

// Two columns, displacement (m) and force (N), after one header line.
MeasuredCurve ReadCurveCsv(std::istream& is, double lever_arm);
MeasuredCurve ReadCurveCsvFile(const std::string& path, double lever_arm);

}  // namespace irj::io

#endif  // IRJ_IO_HPP_
