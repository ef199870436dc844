// Copyright 2026 the nhqsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nhqsim/output.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "nhqsim/version.hpp"

namespace nhqsim {

using nlohmann::json;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round_to_output_precision(double v) {
  return std::strtod(format_number(v).c_str(), nullptr);
}

std::filesystem::path output_root(
    const std::optional<std::string>& override_dir) {
  if (override_dir) return *override_dir;
  if (const char* env = std::getenv("NHE_OUT_DIR"); env && *env) return env;
  return "out";
}

namespace {

std::ofstream open_out(const std::filesystem::path& file) {
  if (file.has_parent_path()) {
    std::filesystem::create_directories(file.parent_path());
  }
  std::ofstream f(file);
  if (!f) {
    throw std::runtime_error("cannot open output file '" + file.string() + "'");
  }
  return f;
}

void dump_json(const std::filesystem::path& file, const json& doc) {
  auto f = open_out(file);
  f << doc.dump(2) << '\n';
}

json report_fields(const EntanglementReport& r, bool failed) {
  json o;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  o["C12"] = round_to_output_precision(failed ? nan : r.c12);
  o["C13"] = round_to_output_precision(failed ? nan : r.c13);
  o["C23"] = round_to_output_precision(failed ? nan : r.c23);
  o["tau"] = round_to_output_precision(failed ? nan : r.tau);
  o["S1"] = round_to_output_precision(failed ? nan : r.s1);
  o["S2"] = round_to_output_precision(failed ? nan : r.s2);
  o["S3"] = round_to_output_precision(failed ? nan : r.s3);
  o["class"] = failed ? "failed" : to_string(r.cls);
  return o;
}

void report_row(std::ofstream& f, const EntanglementReport& r, bool failed) {
  if (failed) {
    const std::string nan = format_number(std::numeric_limits<double>::quiet_NaN());
    for (int i = 0; i < 7; ++i) f << nan << ',';
    f << "failed";
    return;
  }
  f << format_number(r.c12) << ',' << format_number(r.c13) << ','
    << format_number(r.c23) << ',' << format_number(r.tau) << ','
    << format_number(r.s1) << ',' << format_number(r.s2) << ','
    << format_number(r.s3) << ',' << to_string(r.cls);
}

std::vector<std::string> axis_columns(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Time: return {"t_us"};
    case SweepAxis::Omega: return {"omega"};
    case SweepAxis::Delta: return {"delta"};
    case SweepAxis::J12: return {"j12"};
    case SweepAxis::J12xJ23: return {"j12", "j23"};
  }
  return {};
}

}  // namespace

void write_trajectory_csv(const std::filesystem::path& file,
                          const Trajectory& traj) {
  auto f = open_out(file);
  const int dim = traj.states.empty() ? 0 : traj.states.front().dim();
  f << "t_us";
  for (int k = 1; k <= dim; ++k) f << ",re_a" << k;
  for (int k = 1; k <= dim; ++k) f << ",im_a" << k;
  f << ",raw_norm\n";
  for (size_t i = 0; i < traj.states.size(); ++i) {
    f << format_number(traj.times_us[i]);
    const auto& a = traj.states[i].amps;
    for (int k = 0; k < dim; ++k) f << ',' << format_number(a(k).real());
    for (int k = 0; k < dim; ++k) f << ',' << format_number(a(k).imag());
    f << ',' << format_number(traj.raw_norms[i]) << '\n';
  }
}

void write_trajectory_json(const std::filesystem::path& file,
                           const Trajectory& traj) {
  json rows = json::array();
  const int dim = traj.states.empty() ? 0 : traj.states.front().dim();
  for (size_t i = 0; i < traj.states.size(); ++i) {
    json o;
    o["t_us"] = round_to_output_precision(traj.times_us[i]);
    const auto& a = traj.states[i].amps;
    for (int k = 0; k < dim; ++k) {
      o["re_a" + std::to_string(k + 1)] = round_to_output_precision(a(k).real());
      o["im_a" + std::to_string(k + 1)] = round_to_output_precision(a(k).imag());
    }
    o["raw_norm"] = round_to_output_precision(traj.raw_norms[i]);
    rows.push_back(std::move(o));
  }
  dump_json(file, rows);
}

void write_report_csv(const std::filesystem::path& file,
                      const std::vector<EntanglementReport>& reports) {
  auto f = open_out(file);
  f << "t_us,C12,C13,C23,tau,S1,S2,S3,class\n";
  for (const auto& r : reports) {
    f << format_number(r.t_us) << ',';
    report_row(f, r, false);
    f << '\n';
  }
}

void write_report_json(const std::filesystem::path& file,
                       const std::vector<EntanglementReport>& reports) {
  json rows = json::array();
  for (const auto& r : reports) {
    json o = report_fields(r, false);
    o["t_us"] = round_to_output_precision(r.t_us);
    rows.push_back(std::move(o));
  }
  dump_json(file, rows);
}

void write_sweep_csv(const std::filesystem::path& file,
                     const SweepResult& result) {
  auto f = open_out(file);
  const auto axes = axis_columns(result.scenario.axis);
  const bool with_phase = result.scenario.axis == SweepAxis::Omega;
  for (size_t i = 0; i < axes.size(); ++i) f << (i ? "," : "") << axes[i];
  f << ",C12,C13,C23,tau,S1,S2,S3,class";
  if (with_phase) f << ",phase";
  f << ",raw_norm\n";
  for (const auto& pt : result.points) {
    f << format_number(pt.axis1);
    if (axes.size() > 1) f << ',' << format_number(pt.axis2);
    f << ',';
    report_row(f, pt.report, pt.failed);
    if (with_phase) f << ',' << pt.phase;
    f << ',' << format_number(pt.failed
                                  ? std::numeric_limits<double>::quiet_NaN()
                                  : pt.raw_norm)
      << '\n';
  }
}

void write_sweep_json(const std::filesystem::path& file,
                      const SweepResult& result) {
  json rows = json::array();
  const auto axes = axis_columns(result.scenario.axis);
  const bool with_phase = result.scenario.axis == SweepAxis::Omega;
  for (const auto& pt : result.points) {
    json o = report_fields(pt.report, pt.failed);
    o[axes[0]] = round_to_output_precision(pt.axis1);
    if (axes.size() > 1) o[axes[1]] = round_to_output_precision(pt.axis2);
    if (with_phase) o["phase"] = pt.phase;
    o["raw_norm"] = round_to_output_precision(
        pt.failed ? std::numeric_limits<double>::quiet_NaN() : pt.raw_norm);
    rows.push_back(std::move(o));
  }
  dump_json(file, rows);
}

namespace {

json scenario_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  json qubits = json::array();
  for (const auto& q : s.qubits) {
    qubits.push_back({{"delta", q.delta}, {"gamma", q.gamma}, {"omega", q.omega}});
  }
  j["qubits"] = std::move(qubits);
  json rows = json::array();
  for (int a = 0; a < s.coupling.n; ++a) {
    json row = json::array();
    for (int b = 0; b < s.coupling.n; ++b) row.push_back(s.coupling.j(a, b));
    rows.push_back(std::move(row));
  }
  j["coupling"] = {{"topology", "custom"}, {"matrix", std::move(rows)}};
  j["initial_state"] = to_string(s.initial);
  j["grid"] = {{"t_min", s.t_min}, {"t_max", s.t_max}, {"dt", s.dt}};
  j["analysis_time"] = s.analysis_time;
  if (s.axis != SweepAxis::Time) {
    json axis;
    axis["name"] = to_string(s.axis);
    if (!s.axis1.values.empty()) {
      axis["values"] = s.axis1.values;
    } else {
      axis["min"] = s.axis1.lo;
      axis["max"] = s.axis1.hi;
      axis["points"] = s.axis1.points;
      axis["log"] = s.axis1.log_scale;
    }
    j["axis"] = std::move(axis);
  }
  j["norm_floor"] = s.norm_floor;
  return j;
}

}  // namespace

std::string scenario_to_json_text(const Scenario& s) {
  return scenario_json(s).dump(2);
}

void write_meta_json(const std::filesystem::path& file, const Scenario& s,
                     const std::vector<std::string>& outputs,
                     std::size_t points, bool terminated,
                     std::optional<double> phase_boundary) {
  json m;
  m["tool_version"] = kVersion;
  m["scenario"] = scenario_json(s);
  m["description"] = s.description;
  m["outputs"] = outputs;
  m["points"] = points;
  m["terminated"] = terminated;
  if (phase_boundary) m["phase_boundary_omega"] = *phase_boundary;
  const Matrix h = s.hamiltonian();
  json entries = json::array();
  for (int r = 0; r < h.rows(); ++r) {
    for (int c = 0; c < h.cols(); ++c) {
      entries.push_back({h(r, c).real(), h(r, c).imag()});
    }
  }
  m["hamiltonian"] = std::move(entries);
  dump_json(file, m);
}

void write_meta_json(const std::filesystem::path& file,
                     const SweepResult& result,
                     const std::vector<std::string>& outputs) {
  write_meta_json(file, result.scenario, outputs, result.points.size(),
                  result.terminated, result.phase_boundary_omega);
}

}  // namespace nhqsim
