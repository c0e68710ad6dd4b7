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

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string_view>

#include "irj/error.hpp"

namespace irj::io {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void Fail(const std::string& what, const std::string& message) {
  throw SchemaError(what + ": " + message);
}

void RequireObject(const Json& j, const std::string& what) {
  if (!j.is_object()) Fail(what, "expected an object");
}

void CheckKeys(const Json& j, std::initializer_list<std::string_view> allowed,
               const std::string& what) {
  RequireObject(j, what);
  for (const auto& item : j.items()) {
    bool known = false;
    for (std::string_view key : allowed) known = known || key == item.key();
    if (!known) Fail(what, "unknown key '" + item.key() + "'");
  }
}

double Number(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) Fail(what, std::string("missing '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number()) Fail(what, std::string("'") + key + "' must be a number");
  return v.get<double>();
}

double NumberOr(const Json& j, const char* key, double fallback, const std::string& what) {
  if (!j.contains(key)) return fallback;
  return Number(j, key, what);
}

// null encodes +inf (JSON has no infinity).
Json FiniteOrNull(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }
double NumberOrInf(const Json& v, const std::string& what) {
  if (v.is_null()) return kInf;
  if (!v.is_number()) Fail(what, "expected a number or null");
  return v.get<double>();
}

std::size_t Index(const Json& v, const std::string& what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    Fail(what, "expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> IndexList(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    Fail(what, std::string("'") + key + "' must be an array");
  }
  std::vector<std::size_t> out;
  for (const Json& v : j.at(key)) out.push_back(Index(v, what + "." + key));
  return out;
}

std::vector<double> NumberList(const Json& j, const std::string& what) {
  if (!j.is_array()) Fail(what, "expected an array of numbers");
  std::vector<double> out;
  for (const Json& v : j) {
    if (!v.is_number()) Fail(what, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Eigen::Vector3d Point3(const Json& j, const std::string& what) {
  const std::vector<double> v = NumberList(j, what);
  if (v.size() != 2 && v.size() != 3) Fail(what, "expected [x, y] or [x, y, z]");
  return Eigen::Vector3d(v[0], v[1], v.size() == 3 ? v[2] : 0.0);
}

Eigen::Vector2d Point2(const Json& j, const std::string& what) {
  const std::vector<double> v = NumberList(j, what);
  if (v.size() != 2) Fail(what, "expected [x, y]");
  return Eigen::Vector2d(v[0], v[1]);
}

Json ToJson(const Eigen::Vector3d& v) { return Json::array({v.x(), v.y(), v.z()}); }
Json ToJson(const Eigen::Vector2d& v) { return Json::array({v.x(), v.y()}); }

Json ToJson(const Pose& p) {
  const Eigen::Quaterniond& q = p.orientation;
  return Json{{"position", ToJson(p.position)},
              {"orientation", Json::array({q.w(), q.x(), q.y(), q.z()})}};
}

Pose PoseFromJson(const Json& j, const std::string& what) {
  CheckKeys(j, {"position", "orientation"}, what);
  Pose p;
  if (j.contains("position")) p.position = Point3(j.at("position"), what + ".position");
  if (j.contains("orientation")) {
    const std::vector<double> q = NumberList(j.at("orientation"), what + ".orientation");
    if (q.size() != 4) Fail(what, "orientation must be [w, x, y, z]");
    p.orientation = Eigen::Quaterniond(q[0], q[1], q[2], q[3]);
  }
  return p;
}

const char* ModeName(SimulationMode mode) {
  return mode == SimulationMode::kFull ? "full" : "independent";
}

template <typename T, typename Parse>
T Resolve(const Json& j, const std::map<std::string, T>* named, const std::string& what,
          Parse parse) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (named == nullptr || !named->contains(name)) {
      Fail(what, "unknown reference '" + name + "'");
    }
    return named->at(name);
  }
  return parse(j);
}

Json FrameToJson(const Frame& f) {
  Json j = ToJson(f.pose);
  j["kind"] = f.kind == FrameKind::kPlate ? "plate" : "hinge";
  j["index"] = f.unit;
  return j;
}

Frame FrameFromJson(const Json& j) {
  CheckKeys(j, {"kind", "index", "position", "orientation"}, "frame");
  Frame f;
  const std::string kind = j.value("kind", "plate");
  if (kind != "plate" && kind != "hinge") Fail("frame", "kind must be plate or hinge");
  f.kind = kind == "plate" ? FrameKind::kPlate : FrameKind::kHinge;
  f.unit = Index(j.at("index"), "frame.index");
  Json pose = j;
  pose.erase("kind");
  pose.erase("index");
  f.pose = PoseFromJson(pose, "frame");
  return f;
}

Json StateToJson(const JointState& s) {
  return Json{{"angle", s.angle}, {"direction", s.direction.psi()}};
}

JointState StateFromJson(const Json& j) {
  CheckKeys(j, {"angle", "direction"}, "joint state");
  return JointState{Number(j, "angle", "joint state"),
                    BendingDirection(Number(j, "direction", "joint state"))};
}

}  // namespace

Json ToJson(const SectionSpec& s) {
  return Json{{"radius", s.radius},
              {"film_thickness", s.film_thickness},
              {"pressure", s.pressure},
              {"theta1", s.theta1},
              {"theta2", s.theta2}};
}

SectionSpec SectionFromJson(const Json& j) {
  const std::string what = "section";
  CheckKeys(j, {"radius", "film_thickness", "pressure", "theta1", "theta2", "band_width",
                "tape_width"},
            what);
  const double radius = Number(j, "radius", what);
  const double thickness = Number(j, "film_thickness", what);
  const double pressure = Number(j, "pressure", what);
  const int forms = int(j.contains("theta1") || j.contains("theta2")) +
                    int(j.contains("band_width")) + int(j.contains("tape_width"));
  if (forms > 1) Fail(what, "give only one of theta1/theta2, band_width, tape_width");
  SectionSpec s;
  if (j.contains("band_width")) {
    s = SectionSpec::Symmetric(radius, thickness, pressure, Number(j, "band_width", what));
  } else if (j.contains("tape_width")) {
    s = SectionSpec::Symmetric(radius, thickness, pressure,
                               BandWidthFromTape(Number(j, "tape_width", what), radius));
  } else {
    s = SectionSpec::Isotropic(radius, thickness, pressure);
    s.theta1 = NumberOr(j, "theta1", s.theta1, what);
    s.theta2 = NumberOr(j, "theta2", s.theta2, what);
  }
  s.Validate();
  return s;
}

Json ToJson(const JointSpec& joint) {
  Json j{{"section", ToJson(joint.section)},
         {"length", joint.length},
         {"wrinkle_strain", joint.wrinkle_strain},
         {"elastic_slope", joint.elastic_slope},
         {"plateau_onset_angle", joint.plateau_onset_angle},
         {"mount_rotation", joint.mount_rotation}};
  if (joint.rotation_limit_override) j["rotation_limit"] = *joint.rotation_limit_override;
  return j;
}

JointSpec JointFromJson(const Json& j, const SpecDocument* doc) {
  const std::string what = "joint";
  CheckKeys(j, {"section", "length", "wrinkle_strain", "elastic_slope",
                "plateau_onset_angle", "mount_rotation", "rotation_limit"},
            what);
  if (!j.contains("section")) Fail(what, "missing 'section'");
  JointSpec joint;
  joint.section = Resolve(j.at("section"), doc ? &doc->sections : nullptr, what,
                          [](const Json& s) { return SectionFromJson(s); });
  joint.length = Number(j, "length", what);
  joint.wrinkle_strain = Number(j, "wrinkle_strain", what);
  joint.elastic_slope = Number(j, "elastic_slope", what);
  joint.plateau_onset_angle = Number(j, "plateau_onset_angle", what);
  joint.mount_rotation = NumberOr(j, "mount_rotation", 0.0, what);
  if (j.contains("rotation_limit")) {
    joint.rotation_limit_override = Number(j, "rotation_limit", what);
  }
  joint.Validate();
  return joint;
}

Json ToJson(const TendonRoute& route) {
  return Json{{"top_anchor", ToJson(route.top_anchor)},
              {"bottom_anchor", ToJson(route.bottom_anchor)}};
}

TendonRoute RouteFromJson(const Json& j) {
  const std::string what = "route";
  CheckKeys(j, {"top_anchor", "bottom_anchor"}, what);
  if (!j.contains("top_anchor") || !j.contains("bottom_anchor")) {
    Fail(what, "needs top_anchor and bottom_anchor");
  }
  return TendonRoute{Point3(j.at("top_anchor"), what + ".top_anchor"),
                     Point3(j.at("bottom_anchor"), what + ".bottom_anchor")};
}

Json ToJson(const ChainSpec& chain) {
  Json units = Json::array();
  for (const JointSpec& u : chain.units) units.push_back(ToJson(u));
  Json routes = Json::array();
  for (const TendonRoute& r : chain.routes) routes.push_back(ToJson(r));
  Json layout = Json::array();
  for (const Eigen::Vector2d& o : chain.orifice_layout) layout.push_back(ToJson(o));
  return Json{{"units", units},
              {"routes", routes},
              {"orifice_layout", layout},
              {"base_frame", ToJson(chain.base_frame)}};
}

ChainSpec ChainFromJson(const Json& j, const SpecDocument* doc) {
  const std::string what = "chain";
  CheckKeys(j, {"units", "routes", "orifice_layout", "base_frame"}, what);
  if (!j.contains("units") || !j.at("units").is_array()) Fail(what, "'units' must be an array");
  if (!j.contains("routes") || !j.at("routes").is_array()) {
    Fail(what, "'routes' must be an array");
  }
  ChainSpec chain;
  for (const Json& u : j.at("units")) {
    chain.units.push_back(Resolve(u, doc ? &doc->joints : nullptr, what + ".units",
                                  [doc](const Json& x) { return JointFromJson(x, doc); }));
  }
  for (const Json& r : j.at("routes")) {
    chain.routes.push_back(Resolve(r, doc ? &doc->routes : nullptr, what + ".routes",
                                   [](const Json& x) { return RouteFromJson(x); }));
  }
  if (j.contains("orifice_layout")) {
    if (!j.at("orifice_layout").is_array()) Fail(what, "'orifice_layout' must be an array");
    for (const Json& o : j.at("orifice_layout")) {
      chain.orifice_layout.push_back(Point2(o, what + ".orifice_layout"));
    }
  }
  if (j.contains("base_frame")) chain.base_frame = PoseFromJson(j.at("base_frame"), what);
  chain.Validate();
  return chain;
}

Json ToJson(const DesignProblem& p) {
  Json units = Json::array();
  for (const JointSpec& u : p.available_units) units.push_back(ToJson(u));
  Json layout = Json::array();
  for (const Eigen::Vector2d& o : p.orifice_layout) layout.push_back(ToJson(o));
  Json directions = Json::array();
  for (const auto& d : p.target_directions) directions.push_back(d ? Json(*d) : Json(nullptr));
  Json j{{"available_units", units},
         {"orifice_layout", layout},
         {"target_sequence", p.target_sequence},
         {"target_directions", directions},
         {"direction_tolerance", p.direction_tolerance},
         {"allowed_rotations", p.allowed_rotations},
         {"size_cap", p.size_cap}};
  if (std::isfinite(p.max_tension)) j["max_tension"] = p.max_tension;
  return j;
}

DesignProblem ProblemFromJson(const Json& j, const SpecDocument* doc) {
  const std::string what = "problem";
  CheckKeys(j, {"available_units", "orifice_layout", "target_sequence", "target_directions",
                "direction_tolerance", "allowed_rotations", "max_tension", "size_cap"},
            what);
  DesignProblem p;
  if (!j.contains("available_units") || !j.at("available_units").is_array()) {
    Fail(what, "'available_units' must be an array");
  }
  for (const Json& u : j.at("available_units")) {
    p.available_units.push_back(
        Resolve(u, doc ? &doc->joints : nullptr, what + ".available_units",
                [doc](const Json& x) { return JointFromJson(x, doc); }));
  }
  if (!j.contains("orifice_layout") || !j.at("orifice_layout").is_array()) {
    Fail(what, "'orifice_layout' must be an array");
  }
  for (const Json& o : j.at("orifice_layout")) {
    p.orifice_layout.push_back(Point2(o, what + ".orifice_layout"));
  }
  p.target_sequence = IndexList(j, "target_sequence", what);
  if (j.contains("target_directions")) {
    if (!j.at("target_directions").is_array()) Fail(what, "'target_directions' must be an array");
    for (const Json& d : j.at("target_directions")) {
      if (d.is_null()) {
        p.target_directions.emplace_back();
      } else if (d.is_number()) {
        p.target_directions.emplace_back(d.get<double>());
      } else {
        Fail(what, "target directions must be numbers or null");
      }
    }
  }
  p.direction_tolerance = NumberOr(j, "direction_tolerance", p.direction_tolerance, what);
  if (j.contains("allowed_rotations")) {
    p.allowed_rotations = NumberList(j.at("allowed_rotations"), what + ".allowed_rotations");
  }
  p.max_tension = NumberOr(j, "max_tension", kInf, what);
  p.size_cap = NumberOr(j, "size_cap", p.size_cap, what);
  p.Validate();
  return p;
}

SpecDocument ParseSpecDocument(const Json& j) {
  CheckKeys(j, {"schema_version", "sections", "joints", "routes", "chains", "problems"},
            "spec document");
  if (!j.contains("schema_version")) Fail("spec document", "missing 'schema_version'");
  SpecDocument doc;
  doc.schema_version = static_cast<int>(Index(j.at("schema_version"), "schema_version"));
  if (doc.schema_version != kSchemaVersion) {
    Fail("spec document", "unsupported schema_version " + std::to_string(doc.schema_version));
  }
  auto each = [&](const char* key, auto&& handle) {
    if (!j.contains(key)) return;
    RequireObject(j.at(key), key);
    for (const auto& item : j.at(key).items()) {
      try {
        handle(item.key(), item.value());
      } catch (const SchemaError& e) {
        throw SchemaError(std::string(key) + "." + item.key() + ": " + e.what());
      }
    }
  };
  // Order matters: later kinds may reference earlier ones by name.
  each("sections", [&](const std::string& k, const Json& v) {
    doc.sections[k] = SectionFromJson(v);
  });
  each("routes", [&](const std::string& k, const Json& v) { doc.routes[k] = RouteFromJson(v); });
  each("joints", [&](const std::string& k, const Json& v) {
    doc.joints[k] = JointFromJson(v, &doc);
  });
  each("chains", [&](const std::string& k, const Json& v) {
    doc.chains[k] = ChainFromJson(v, &doc);
  });
  each("problems", [&](const std::string& k, const Json& v) {
    doc.problems[k] = ProblemFromJson(v, &doc);
  });
  return doc;
}

Json ToJson(const SpecDocument& doc) {
  Json j{{"schema_version", doc.schema_version}};
  auto put = [&](const char* key, const auto& named) {
    if (named.empty()) return;
    Json obj = Json::object();
    for (const auto& [name, value] : named) obj[name] = ToJson(value);
    j[key] = obj;
  };
  put("sections", doc.sections);
  put("joints", doc.joints);
  put("routes", doc.routes);
  put("chains", doc.chains);
  put("problems", doc.problems);
  return j;
}

Json ToJson(const BuckleThreshold& t) {
  return Json{{"tension", FiniteOrNull(t.tension)},
              {"direction", t.direction.psi()},
              {"reachable", t.reachable}};
}

Json ToJson(const SequenceReport& report) {
  Json events = Json::array();
  for (const SequenceEvent& e : report.events) {
    Json config = Json::array();
    for (const JointState& s : e.configuration) config.push_back(StateToJson(s));
    events.push_back(Json{{"unit", e.unit},
                          {"threshold", e.threshold},
                          {"tension", e.tension},
                          {"direction", e.direction.psi()},
                          {"tie", e.tie},
                          {"configuration", config}});
  }
  Json shape = Json::array();
  for (const Frame& f : report.final_shape) shape.push_back(FrameToJson(f));
  return Json{{"schema_version", kSchemaVersion},
              {"mode", ModeName(report.mode)},
              {"max_tension", report.max_tension},
              {"events", events},
              {"unreached", report.unreached},
              {"final_shape", shape}};
}

SequenceReport ReportFromJson(const Json& j) {
  const std::string what = "sequence report";
  CheckKeys(j, {"schema_version", "mode", "max_tension", "events", "unreached", "final_shape"},
            what);
  SequenceReport r;
  const std::string mode = j.value("mode", "full");
  if (mode != "full" && mode != "independent") Fail(what, "mode must be full or independent");
  r.mode = mode == "full" ? SimulationMode::kFull : SimulationMode::kIndependent;
  r.max_tension = Number(j, "max_tension", what);
  for (const Json& e : j.value("events", Json::array())) {
    CheckKeys(e, {"unit", "threshold", "tension", "direction", "tie", "configuration"},
              "event");
    SequenceEvent ev;
    ev.unit = Index(e.at("unit"), "event.unit");
    ev.threshold = Number(e, "threshold", "event");
    ev.tension = Number(e, "tension", "event");
    ev.direction = BendingDirection(Number(e, "direction", "event"));
    ev.tie = e.value("tie", false);
    for (const Json& s : e.value("configuration", Json::array())) {
      ev.configuration.push_back(StateFromJson(s));
    }
    r.events.push_back(std::move(ev));
  }
  if (j.contains("unreached")) r.unreached = IndexList(j, "unreached", what);
  for (const Json& f : j.value("final_shape", Json::array())) {
    r.final_shape.push_back(FrameFromJson(f));
  }
  return r;
}

Json ToJson(const DesignSolution& s) {
  return Json{{"encoding",
               Json{{"order", s.encoding.order},
                    {"rotations", s.encoding.rotations},
                    {"orifices", s.encoding.orifices}}},
              {"chain", ToJson(s.chain)},
              {"margin", FiniteOrNull(s.margin)}};
}

DesignSolution SolutionFromJson(const Json& j) {
  const std::string what = "design solution";
  CheckKeys(j, {"encoding", "chain", "margin"}, what);
  DesignSolution s;
  const Json& e = j.at("encoding");
  CheckKeys(e, {"order", "rotations", "orifices"}, "encoding");
  s.encoding.order = IndexList(e, "order", "encoding");
  s.encoding.rotations = IndexList(e, "rotations", "encoding");
  s.encoding.orifices = IndexList(e, "orifices", "encoding");
  s.chain = ChainFromJson(j.at("chain"));
  s.margin = NumberOrInf(j.at("margin"), what + ".margin");
  return s;
}

Json ToJson(const std::vector<DesignSolution>& solutions) {
  Json list = Json::array();
  for (const DesignSolution& s : solutions) list.push_back(ToJson(s));
  return Json{{"schema_version", kSchemaVersion}, {"solutions", list}};
}

std::vector<DesignSolution> SolutionsFromJson(const Json& j) {
  CheckKeys(j, {"schema_version", "solutions"}, "solutions");
  std::vector<DesignSolution> out;
  for (const Json& s : j.at("solutions")) out.push_back(SolutionFromJson(s));
  return out;
}

Json ToJson(const PlateauEstimate& p) {
  return Json{{"moment", p.moment},
              {"window_begin", p.window_begin},
              {"window_end", p.window_end},
              {"mean_abs_slope", p.mean_abs_slope},
              {"window_fraction", p.window_fraction},
              {"low_confidence", p.low_confidence}};
}

Json ToJson(const PressureFit& fit) {
  Json points = Json::array();
  for (const auto& [p, m] : fit.points) points.push_back(Json::array({p, m}));
  Json plateaus = Json::array();
  for (const PlateauEstimate& p : fit.plateaus) plateaus.push_back(ToJson(p));
  return Json{{"slope", fit.slope},
              {"intercept", fit.intercept},
              {"points", points},
              {"plateaus", plateaus},
              {"max_relative_residual", fit.max_relative_residual}};
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

SpecDocument LoadSpecDocument(const std::string& path) {
  return ParseSpecDocument(ReadJsonFile(path));
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string FormatNumber(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void WriteCsv(std::ostream& os, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << FormatNumber(row[i]);
    os << '\n';
  }
}

void WriteShapeCsv(std::ostream& os, const std::vector<Frame>& frames) {
  os << "index,kind,unit,x,y,z,qw,qx,qy,qz\n";
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Frame& f = frames[i];
    const Eigen::Vector3d& p = f.pose.position;
    const Eigen::Quaterniond& q = f.pose.orientation;
    os << i << ',' << (f.kind == FrameKind::kPlate ? "plate" : "hinge") << ',' << f.unit;
    for (double v : {p.x(), p.y(), p.z(), q.w(), q.x(), q.y(), q.z()}) {
      os << ',' << FormatNumber(v);
    }
    os << '\n';
  }
}

void WriteSweepCsv(std::ostream& os, const std::vector<SweepEntry>& table) {
  os << "top_angle_rad,bottom_angle_rad,tension_N,direction_rad,reachable\n";
  for (const SweepEntry& e : table) {
    os << FormatNumber(e.top_angle) << ',' << FormatNumber(e.bottom_angle) << ','
       << (e.threshold.reachable ? FormatNumber(e.threshold.tension) : std::string("inf"))
       << ',' << FormatNumber(e.threshold.direction.psi()) << ','
       << (e.threshold.reachable ? 1 : 0) << '\n';
  }
}

MeasuredCurve ReadCurveCsv(std::istream& is, double lever_arm) {
  MeasuredCurve curve;
  curve.lever_arm = lever_arm;
  std::string line;
  if (!std::getline(is, line)) throw SchemaError("curve CSV is empty");
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw SchemaError("curve CSV line " + std::to_string(line_no) + ": expected 2 columns");
    }
    double values[2];
    const std::string_view fields[2] = {std::string_view(line).substr(0, comma),
                                        std::string_view(line).substr(comma + 1)};
    for (int c = 0; c < 2; ++c) {
      std::string_view f = fields[c];
      while (!f.empty() && f.front() == ' ') f.remove_prefix(1);
      while (!f.empty() && f.back() == ' ') f.remove_suffix(1);
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), values[c]);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw SchemaError("curve CSV line " + std::to_string(line_no) + ": bad number");
      }
    }
    curve.displacement.push_back(values[0]);
    curve.force.push_back(values[1]);
  }
  return curve;
}

MeasuredCurve ReadCurveCsvFile(const std::string& path, double lever_arm) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return ReadCurveCsv(in, lever_arm);
}

}  // namespace irj::io
