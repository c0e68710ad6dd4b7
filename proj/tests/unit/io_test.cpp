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

#include "irj/io.hpp"

#include <clocale>
#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "irj/error.hpp"

namespace irj {
namespace {

using io::Json;

constexpr double kPi = std::numbers::pi;

Json SectionJson() {
  return Json{{"radius", 0.0335}, {"film_thickness", 5e-5}, {"pressure", 6890.0}};
}

Json JointJson() {
  return Json{{"section", SectionJson()},
              {"length", 0.06},
              {"wrinkle_strain", 0.333},
              {"elastic_slope", 20.0},
              {"plateau_onset_angle", 0.3}};
}

TEST(SectionFromJson, AcceptsEveryBandForm) {
  Json j = SectionJson();
  EXPECT_EQ(io::SectionFromJson(j), SectionSpec::Isotropic(0.0335, 5e-5, 6890.0));
  j["band_width"] = kPi / 4;
  EXPECT_EQ(io::SectionFromJson(j), SectionSpec::Symmetric(0.0335, 5e-5, 6890.0, kPi / 4));
  j.erase("band_width");
  j["tape_width"] = 0.0127;
  EXPECT_NEAR(io::SectionFromJson(j).band_width(), 0.379104477611940, 1e-12);
  j.erase("tape_width");
  j["theta1"] = 0.2;
  j["theta2"] = 1.9;
  const SectionSpec s = io::SectionFromJson(j);
  EXPECT_EQ(s.theta1, 0.2);
  EXPECT_EQ(s.theta2, 1.9);
}

TEST(SectionFromJson, RejectsUnknownKeysAndMixedForms) {
  Json j = SectionJson();
  j["radious"] = 1.0;
  EXPECT_THROW(io::SectionFromJson(j), SchemaError);
  j = SectionJson();
  j["band_width"] = 1.0;
  j["tape_width"] = 0.01;
  EXPECT_THROW(io::SectionFromJson(j), SchemaError);
  j = SectionJson();
  j["radius"] = "big";
  EXPECT_THROW(io::SectionFromJson(j), SchemaError);
  j = SectionJson();
  j.erase("pressure");
  EXPECT_THROW(io::SectionFromJson(j), SchemaError);
  j = SectionJson();
  j["pressure"] = -1.0;
  EXPECT_THROW(io::SectionFromJson(j), DomainError);
}

TEST(SpecDocument, ResolvesNamesAndRoundTrips) {
  const io::SpecDocument doc = io::LoadSpecDocument(IRJ_TEST_DATA_DIR "/two_unit.json");
  ASSERT_EQ(doc.chains.size(), 1u);
  const ChainSpec& chain = doc.chains.at("two_unit");
  EXPECT_EQ(chain.units[0], doc.joints.at("wide"));
  EXPECT_EQ(chain.routes[1], doc.routes.at("soft_offset"));
  const io::SpecDocument again = io::ParseSpecDocument(Json::parse(io::ToJson(doc).dump()));
  EXPECT_EQ(again, doc);
}

TEST(SpecDocument, RejectsBadDocuments) {
  EXPECT_THROW(io::ParseSpecDocument(Json::object()), SchemaError);
  EXPECT_THROW(io::ParseSpecDocument(Json{{"schema_version", 2}}), SchemaError);
  EXPECT_THROW(io::ParseSpecDocument(Json{{"schema_version", 1}, {"extras", 1}}), SchemaError);
  const Json dangling{{"schema_version", 1},
                      {"joints", {{"j", Json{{"section", "missing"},
                                             {"length", 0.06},
                                             {"wrinkle_strain", 0.333},
                                             {"elastic_slope", 20.0},
                                             {"plateau_onset_angle", 0.3}}}}}};
  try {
    io::ParseSpecDocument(dangling);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("joints.j"), std::string::npos);
  }
  EXPECT_THROW(io::LoadSpecDocument("/nonexistent/spec.json"), IoError);
}

TEST(Json, JointRoundTripKeepsOverride) {
  JointSpec j = io::JointFromJson(JointJson());
  j.mount_rotation = 0.25;
  j.rotation_limit_override = 0.5;
  EXPECT_EQ(io::JointFromJson(Json::parse(io::ToJson(j).dump())), j);
}

TEST(Json, ReportRoundTrip) {
  const io::SpecDocument doc = io::LoadSpecDocument(IRJ_TEST_DATA_DIR "/two_unit.json");
  const SequenceReport r = SimulateRamp(doc.chains.at("two_unit"), 100.0);
  ASSERT_EQ(r.events.size(), 2u);
  const SequenceReport back = io::ReportFromJson(Json::parse(io::ToJson(r).dump()));
  EXPECT_EQ(back, r);
}

TEST(Json, SolutionsRoundTrip) {
  const io::SpecDocument doc = io::LoadSpecDocument(IRJ_TEST_DATA_DIR "/two_unit.json");
  DesignProblem p = doc.problems.at("narrow_first");
  const auto solutions = EnumerateDesigns(p);
  ASSERT_FALSE(solutions.empty());
  const Json j = Json::parse(io::ToJson(solutions).dump());
  EXPECT_EQ(io::SolutionsFromJson(j), solutions);
  p.available_units.resize(1);
  p.target_sequence = {0};
  const auto single = EnumerateDesigns(p);
  ASSERT_FALSE(single.empty());
  const Json js = io::ToJson(single);
  EXPECT_TRUE(js["solutions"][0]["margin"].is_null());
  EXPECT_EQ(io::SolutionsFromJson(Json::parse(js.dump())), single);
}

TEST(Json, ProblemRoundTrip) {
  const io::SpecDocument doc = io::LoadSpecDocument(IRJ_TEST_DATA_DIR "/two_unit.json");
  DesignProblem p = doc.problems.at("narrow_first");
  p.target_directions = {std::nullopt, 0.5 * kPi};
  p.max_tension = 40.0;
  EXPECT_EQ(io::ProblemFromJson(Json::parse(io::ToJson(p).dump())), p);
  const Json unlimited = io::ToJson(doc.problems.at("narrow_first"));
  EXPECT_FALSE(unlimited.contains("max_tension"));
}

TEST(Csv, ShortestRoundTripNumbers) {
  for (double v : {0.1, 1.0 / 3.0, 6890.0, -2.5e-17, 0.8137734484326887}) {
    EXPECT_EQ(std::stod(io::FormatNumber(v)), v);
  }
  EXPECT_EQ(io::FormatNumber(0.5), "0.5");
}

TEST(Csv, LocaleIndependentAndStable) {
  std::vector<std::vector<double>> rows{{0.5, 1.25}, {2.0, -0.125}};
  std::ostringstream a;
  io::WriteCsv(a, {"x", "y"}, rows);
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") == nullptr) {
    std::setlocale(LC_NUMERIC, "fr_FR.UTF-8");
  }
  std::ostringstream b;
  io::WriteCsv(b, {"x", "y"}, rows);
  std::setlocale(LC_NUMERIC, saved.c_str());
  EXPECT_EQ(a.str(), "x,y\n0.5,1.25\n2,-0.125\n");
  EXPECT_EQ(a.str(), b.str());
}

TEST(Csv, ShapeAndSweepLayouts) {
  const io::SpecDocument doc = io::LoadSpecDocument(IRJ_TEST_DATA_DIR "/two_unit.json");
  const SequenceReport r = SimulateRamp(doc.chains.at("two_unit"), 100.0);
  std::ostringstream shape;
  io::WriteShapeCsv(shape, r.final_shape);
  std::istringstream lines(shape.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "index,kind,unit,x,y,z,qw,qx,qy,qz");
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("0,plate,0,", 0), 0u);

  std::ostringstream sweep;
  io::WriteSweepCsv(sweep, RoutingSweep(doc.joints.at("narrow"), {0.0}, {0.0, kPi / 2}, 0.02));
  EXPECT_EQ(sweep.str().substr(0, sweep.str().find('\n')),
            "top_angle_rad,bottom_angle_rad,tension_N,direction_rad,reachable");
  std::ostringstream again;
  io::WriteSweepCsv(again, RoutingSweep(doc.joints.at("narrow"), {0.0}, {0.0, kPi / 2}, 0.02));
  EXPECT_EQ(sweep.str(), again.str());
}

TEST(Csv, ReadsCurves) {
  std::istringstream in("d,f\n0,1\n0.5, 2\r\n\n1,3\n");
  const MeasuredCurve c = io::ReadCurveCsv(in, 0.08);
  EXPECT_EQ(c.displacement, (std::vector<double>{0, 0.5, 1}));
  EXPECT_EQ(c.force, (std::vector<double>{1, 2, 3}));
  std::istringstream bad("d,f\n0;1\n");
  EXPECT_THROW(io::ReadCurveCsv(bad, 0.08), SchemaError);
  std::istringstream junk("d,f\n0,abc\n");
  EXPECT_THROW(io::ReadCurveCsv(junk, 0.08), SchemaError);
}

}  // namespace
}  // namespace irj
