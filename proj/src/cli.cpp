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

#include "irj/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "irj/chain_sim.hpp"
#include "irj/data_reduction.hpp"
#include "irj/design_search.hpp"
#include "irj/error.hpp"
#include "irj/io.hpp"
#include "irj/joint_model.hpp"
#include "irj/quantity.hpp"
#include "irj/section_mechanics.hpp"
#include "irj/tendon.hpp"

namespace irj {
namespace {

using io::Json;

[[noreturn]] void Usage(const std::string& message) {
  throw DomainError("cli_io", message, "usage");
}

template <typename T>
const T& Lookup(const std::map<std::string, T>& named, const std::string& name,
                const char* kind) {
  const auto it = named.find(name);
  if (it == named.end()) throw SchemaError(std::string("no ") + kind + " named '" + name + "'");
  return it->second;
}

io::SpecDocument RequireSpec(const std::string& path) {
  if (path.empty()) Usage("--spec is required");
  return io::LoadSpecDocument(path);
}

// Writes to `path`, or to `out` when no path was given.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::WriteTextFile(path, text);
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<double> OptionalQuantity(const std::string& text, Dimension dim) {
  if (text.empty()) return std::nullopt;
  return ParseQuantity(text, dim);
}

std::vector<double> AngleGrid(const std::string& start, const std::string& stop,
                              std::size_t count) {
  if (count == 0) Usage("--count must be positive");
  const double a = ParseQuantity(start, Dimension::kAngle);
  const double b = ParseQuantity(stop, Dimension::kAngle);
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = count == 1 ? a : a + (b - a) * double(i) / double(count - 1);
  }
  return grid;
}

struct MmaxArgs {
  std::string spec, section, joint;
  std::string radius, pressure, thickness = "50um", band_width, tape_width, direction;
};

void RunMmax(const MmaxArgs& a, std::ostream& out) {
  SectionSpec section;
  if (!a.section.empty() || !a.joint.empty()) {
    const io::SpecDocument doc = RequireSpec(a.spec);
    section = a.joint.empty() ? Lookup(doc.sections, a.section, "section")
                              : Lookup(doc.joints, a.joint, "joint").section;
  } else {
    if (a.radius.empty() || a.pressure.empty()) {
      Usage("give --radius and --pressure, or --spec with --section or --joint");
    }
    if (!a.band_width.empty() && !a.tape_width.empty()) {
      Usage("--band-width and --tape-width are exclusive");
    }
    const double r = ParseQuantity(a.radius, Dimension::kLength);
    const double p = ParseQuantity(a.pressure, Dimension::kPressure);
    const double t = ParseQuantity(a.thickness, Dimension::kLength);
    if (!a.band_width.empty()) {
      section = SectionSpec::Symmetric(r, t, p, ParseQuantity(a.band_width, Dimension::kAngle));
    } else if (!a.tape_width.empty()) {
      section = SectionSpec::Symmetric(
          r, t, p, BandWidthFromTape(ParseQuantity(a.tape_width, Dimension::kLength), r));
    } else {
      section = SectionSpec::Isotropic(r, t, p);
    }
  }
  section.Validate();
  Json j{{"section", io::ToJson(section)},
         {"isotropic_moment", IsotropicBucklingMoment(section)},
         {"max_moment", MaxRestoringMoment(section)},
         {"onset_moment", WrinkleOnsetMoment(section)},
         {"soft_max_moment", DirectionalMaxMoment(section, BendingDirection::Soft())},
         {"stiff_max_moment", DirectionalMaxMoment(section, BendingDirection::Stiff())},
         {"stiffness_ratio", StiffnessRatio(section.band_width())}};
  if (const auto psi = OptionalQuantity(a.direction, Dimension::kAngle)) {
    j["direction"] = *psi;
    j["directional_max_moment"] = DirectionalMaxMoment(section, BendingDirection(*psi));
  }
  out << Dump(j);
}

struct CurveArgs {
  std::string spec, joint, direction = "0", pressure, out;
  std::size_t samples = 101;
};

void RunMomentCurve(const CurveArgs& a, std::ostream& out) {
  const io::SpecDocument doc = RequireSpec(a.spec);
  JointSpec joint = Lookup(doc.joints, a.joint, "joint");
  if (const auto p = OptionalQuantity(a.pressure, Dimension::kPressure)) {
    joint = joint.WithPressure(*p);
  }
  if (a.samples < 2) Usage("--samples must be at least 2");
  const BendingDirection dir(ParseQuantity(a.direction, Dimension::kAngle));
  const double limit = RotationLimit(joint);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < a.samples; ++i) {
    const double angle = limit * double(i) / double(a.samples - 1);
    rows.push_back({angle, RestoringMomentCurve(joint, dir, angle)});
  }
  std::ostringstream csv;
  io::WriteCsv(csv, {"angle_rad", "moment_Nm"}, rows);
  Emit(a.out, csv.str(), out);
}

struct TendonArgs {
  std::string spec, joint, route, out;
  bool sweep = false, serial = false;
  std::string anchor_radius, start = "0deg", stop = "180deg";
  std::size_t count = 10;
};

void RunTendon(const TendonArgs& a, std::ostream& out) {
  const io::SpecDocument doc = RequireSpec(a.spec);
  const JointSpec& joint = Lookup(doc.joints, a.joint, "joint");
  if (a.sweep) {
    if (a.anchor_radius.empty()) Usage("--sweep needs --anchor-radius");
    const std::vector<double> angles = AngleGrid(a.start, a.stop, a.count);
    const auto table =
        RoutingSweep(joint, angles, angles, ParseQuantity(a.anchor_radius, Dimension::kLength),
                     a.serial ? Execution::kSerial : Execution::kParallel);
    std::ostringstream csv;
    io::WriteSweepCsv(csv, table);
    Emit(a.out, csv.str(), out);
    return;
  }
  if (a.route.empty()) Usage("give --route or --sweep");
  const TendonRoute& route = Lookup(doc.routes, a.route, "route");
  ValidateRoute(joint, route);
  const UnitMoment m = UnitTensionMoment(joint, route);
  Json j = io::ToJson(ComputeBuckleThreshold(joint, m));
  j["unit_moment"] = Json{{"soft", m.soft}, {"stiff", m.stiff}};
  Emit(a.out, Dump(j), out);
}

struct SequenceArgs {
  std::string spec, chain, max_tension, mode = "full", out, report;
};

SimulationMode ParseMode(const std::string& mode) {
  if (mode == "full") return SimulationMode::kFull;
  if (mode == "independent") return SimulationMode::kIndependent;
  Usage("--mode must be full or independent");
}

SequenceReport Simulate(const SequenceArgs& a) {
  const io::SpecDocument doc = RequireSpec(a.spec);
  const ChainSpec& chain = Lookup(doc.chains, a.chain, "chain");
  if (a.max_tension.empty()) Usage("--max-tension is required");
  return SimulateRamp(chain, ParseQuantity(a.max_tension, Dimension::kForce), ParseMode(a.mode));
}

void RunSequence(const SequenceArgs& a, std::ostream& out) {
  Emit(a.out, Dump(io::ToJson(Simulate(a))), out);
}

void RunShape(const SequenceArgs& a, std::ostream& out) {
  const SequenceReport report =
      a.report.empty() ? Simulate(a) : io::ReportFromJson(io::ReadJsonFile(a.report));
  std::ostringstream csv;
  io::WriteShapeCsv(csv, report.final_shape);
  Emit(a.out, csv.str(), out);
}

struct FitArgs {
  std::vector<std::string> curves;
  std::string lever_arm, out;
  double window = kDefaultWindowFraction;
};

void RunFit(const FitArgs& a, std::ostream& out) {
  if (a.lever_arm.empty()) Usage("--lever-arm is required");
  const double lever = ParseQuantity(a.lever_arm, Dimension::kLength);
  std::vector<std::pair<double, MeasuredCurve>> curves;
  for (const std::string& item : a.curves) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      curves.emplace_back(std::nan(""), io::ReadCurveCsvFile(item, lever));
    } else {
      curves.emplace_back(ParseQuantity(item.substr(0, eq), Dimension::kPressure),
                          io::ReadCurveCsvFile(item.substr(eq + 1), lever));
    }
  }
  Json j;
  if (curves.size() == 1) {
    j = Json{{"plateau", io::ToJson(ExtractPlateau(curves[0].second, a.window))}};
  } else {
    for (const auto& [p, c] : curves) {
      if (std::isnan(p)) Usage("every --curve needs a PRESSURE=FILE form when fitting");
    }
    j = Json{{"fit", io::ToJson(FitPressureScaling(curves, a.window))}};
  }
  j["window_fraction"] = a.window;
  Emit(a.out, Dump(j), out);
}

struct SearchArgs {
  std::string spec, problem, out;
  bool serial = false;
};

void RunSearch(const SearchArgs& a, std::ostream& out) {
  const io::SpecDocument doc = RequireSpec(a.spec);
  const DesignProblem& problem = Lookup(doc.problems, a.problem, "problem");
  const auto solutions =
      EnumerateDesigns(problem, a.serial ? Execution::kSerial : Execution::kParallel);
  Emit(a.out, Dump(io::ToJson(solutions)), out);
}

void ReportError(std::ostream& err, const std::string& kind, const std::string& module,
                 const std::string& message) {
  err << Json{{"error", {{"kind", kind}, {"module", module}, {"message", message}}}}.dump()
      << '\n';
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inflated rotational joint models and chain design", "irj"};
  app.require_subcommand(1);

  MmaxArgs mmax;
  auto* c_mmax = app.add_subcommand("mmax", "Section buckling and onset moments (JSON)");
  c_mmax->add_option("--spec", mmax.spec, "Spec document");
  c_mmax->add_option("--section", mmax.section, "Section name in the spec");
  c_mmax->add_option("--joint", mmax.joint, "Joint name in the spec");
  c_mmax->add_option("--radius", mmax.radius, "Inflated radius, e.g. 33.5mm");
  c_mmax->add_option("--pressure", mmax.pressure, "Gauge pressure, e.g. 6.89kPa");
  c_mmax->add_option("--thickness", mmax.thickness, "Film thickness")->capture_default_str();
  c_mmax->add_option("--band-width", mmax.band_width, "Tensioned band width, e.g. 22.5deg");
  c_mmax->add_option("--tape-width", mmax.tape_width, "Taped band arc width, e.g. 12.7mm");
  c_mmax->add_option("--direction", mmax.direction, "Also report this bending direction");

  CurveArgs curve;
  auto* c_curve = app.add_subcommand("moment-curve", "Moment-rotation curve (CSV)");
  c_curve->add_option("--spec", curve.spec, "Spec document")->required();
  c_curve->add_option("--joint", curve.joint, "Joint name")->required();
  c_curve->add_option("--direction", curve.direction, "Bending direction")->capture_default_str();
  c_curve->add_option("--pressure", curve.pressure, "Override the joint pressure");
  c_curve->add_option("--samples", curve.samples, "Sample count")->capture_default_str();
  c_curve->add_option("--out", curve.out, "Output CSV (default stdout)");

  TendonArgs tendon;
  auto* c_tendon = app.add_subcommand("tendon", "Buckle threshold or routing sweep");
  c_tendon->add_option("--spec", tendon.spec, "Spec document")->required();
  c_tendon->add_option("--joint", tendon.joint, "Joint name")->required();
  c_tendon->add_option("--route", tendon.route, "Route name (single threshold, JSON)");
  c_tendon->add_flag("--sweep", tendon.sweep, "Sweep top and bottom anchor angles (CSV)");
  c_tendon->add_option("--anchor-radius", tendon.anchor_radius, "Anchor circle radius");
  c_tendon->add_option("--start", tendon.start, "First sweep angle")->capture_default_str();
  c_tendon->add_option("--stop", tendon.stop, "Last sweep angle")->capture_default_str();
  c_tendon->add_option("--count", tendon.count, "Angles per anchor")->capture_default_str();
  c_tendon->add_flag("--serial", tendon.serial, "Use the serial kernel");
  c_tendon->add_option("--out", tendon.out, "Output file (default stdout)");

  SequenceArgs seq;
  auto* c_seq = app.add_subcommand("sequence", "Tension ramp on a chain (JSON report)");
  c_seq->add_option("--spec", seq.spec, "Spec document")->required();
  c_seq->add_option("--chain", seq.chain, "Chain name")->required();
  c_seq->add_option("--max-tension", seq.max_tension, "Ramp end tension, e.g. 40N")->required();
  c_seq->add_option("--mode", seq.mode, "full or independent")->capture_default_str();
  c_seq->add_option("--out", seq.out, "Output JSON (default stdout)");

  SequenceArgs shape;
  auto* c_shape = app.add_subcommand("shape", "Final chain frames (CSV)");
  c_shape->add_option("--report", shape.report, "Sequence report to read");
  c_shape->add_option("--spec", shape.spec, "Spec document");
  c_shape->add_option("--chain", shape.chain, "Chain name");
  c_shape->add_option("--max-tension", shape.max_tension, "Ramp end tension");
  c_shape->add_option("--mode", shape.mode, "full or independent")->capture_default_str();
  c_shape->add_option("--out", shape.out, "Output CSV (default stdout)");

  FitArgs fit;
  auto* c_fit = app.add_subcommand("fit", "Plateau extraction and pressure fit (JSON)");
  c_fit->add_option("--curve", fit.curves, "FILE, or PRESSURE=FILE when fitting")->required();
  c_fit->add_option("--lever-arm", fit.lever_arm, "Load distance, e.g. 80mm")->required();
  c_fit->add_option("--window", fit.window, "Window fraction")->capture_default_str();
  c_fit->add_option("--out", fit.out, "Output JSON (default stdout)");

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Enumerate chain designs (JSON)");
  c_search->add_option("--spec", search.spec, "Spec document")->required();
  c_search->add_option("--problem", search.problem, "Problem name")->required();
  c_search->add_flag("--serial", search.serial, "Use the serial kernel");
  c_search->add_option("--out", search.out, "Output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e, out, err);
    }
    ReportError(err, "usage", "cli_io", e.what());
    err << app.help();
    return kExitUsage;
  }

  try {
    if (c_mmax->parsed()) RunMmax(mmax, out);
    if (c_curve->parsed()) RunMomentCurve(curve, out);
    if (c_tendon->parsed()) RunTendon(tendon, out);
    if (c_seq->parsed()) RunSequence(seq, out);
    if (c_shape->parsed()) RunShape(shape, out);
    if (c_fit->parsed()) RunFit(fit, out);
    if (c_search->parsed()) RunSearch(search, out);
  } catch (const Error& e) {
    ReportError(err, e.kind(), e.module(), e.what());
    return e.kind() == "usage" ? kExitUsage : kExitError;
  } catch (const std::exception& e) {
    ReportError(err, "internal", "cli_io", e.what());
    return kExitError;
  }
  return kExitOk;
}

}  // namespace irj
