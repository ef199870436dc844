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

#include "nhqsim/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "nhqsim/hamiltonian.hpp"

namespace nhqsim {

using nlohmann::json;

std::string to_string(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw config_error("unknown output format '" + s + "' (expected csv or json)");
}

InitialState initial_state_from_string(const std::string& s) {
  if (s == "coherent") return InitialState::CoherentSuperposition;
  if (s == "all_f") return InitialState::AllF;
  throw config_error("unknown initial state '" + s +
                     "' (expected coherent or all_f)");
}

SweepAxis sweep_axis_from_string(const std::string& s) {
  if (s == "time") return SweepAxis::Time;
  if (s == "omega") return SweepAxis::Omega;
  if (s == "delta") return SweepAxis::Delta;
  if (s == "j12") return SweepAxis::J12;
  if (s == "j12_x_j23") return SweepAxis::J12xJ23;
  throw config_error("unknown sweep axis '" + s + "'");
}

Objective objective_from_string(const std::string& s) {
  if (s == "max_tau") return Objective::MaxTau;
  if (s == "min_max_pairwise_concurrence") {
    return Objective::MinMaxPairwiseConcurrence;
  }
  if (s == "max_min_entropy") return Objective::MaxMinEntropy;
  if (s == "max_pairwise_concurrence") return Objective::MaxPairwiseConcurrence;
  throw config_error("unknown objective '" + s + "'");
}

namespace {

void check_keys(const json& obj, const std::string& context,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw config_error("unknown key '" + it.key() + "' in " + context);
    }
  }
}

double get_number(const json& obj, const char* key, const std::string& context) {
  if (!obj.at(key).is_number()) {
    throw config_error("key '" + std::string(key) + "' in " + context +
                       " must be a number");
  }
  return obj.at(key).get<double>();
}

std::string get_string(const json& obj, const char* key,
                       const std::string& context) {
  if (!obj.at(key).is_string()) {
    throw config_error("key '" + std::string(key) + "' in " + context +
                       " must be a string");
  }
  return obj.at(key).get<std::string>();
}

std::vector<QubitParams> parse_qubits(const json& arr) {
  if (!arr.is_array() || arr.empty()) {
    throw config_error("'qubits' must be a non-empty array");
  }
  std::vector<QubitParams> out;
  for (const auto& e : arr) {
    if (!e.is_object()) {
      throw config_error("entries of 'qubits' must be objects");
    }
    check_keys(e, "qubits[]", {"delta", "gamma", "omega"});
    QubitParams q;
    if (e.contains("delta")) q.delta = get_number(e, "delta", "qubits[]");
    if (e.contains("gamma")) q.gamma = get_number(e, "gamma", "qubits[]");
    if (e.contains("omega")) q.omega = get_number(e, "omega", "qubits[]");
    out.push_back(q);
  }
  return out;
}

CouplingGraph parse_coupling(const json& obj, int n) {
  if (!obj.is_object()) throw config_error("'coupling' must be an object");
  check_keys(obj, "coupling", {"topology", "strength", "matrix"});
  if (!obj.contains("topology")) {
    throw config_error("'coupling' requires a 'topology'");
  }
  const std::string topology = get_string(obj, "topology", "coupling");
  try {
    if (topology == "custom") {
      if (!obj.contains("matrix") || !obj.at("matrix").is_array()) {
        throw config_error("custom coupling requires a 'matrix' array");
      }
      const auto& rows = obj.at("matrix");
      const int m = static_cast<int>(rows.size());
      RealMatrix j(m, m);
      for (int a = 0; a < m; ++a) {
        if (!rows[a].is_array() || static_cast<int>(rows[a].size()) != m) {
          throw config_error("coupling matrix must be square");
        }
        for (int b = 0; b < m; ++b) {
          if (!rows[a][b].is_number()) {
            throw config_error("coupling matrix entries must be numbers");
          }
          j(a, b) = rows[a][b].get<double>();
        }
      }
      return CouplingGraph::custom(std::move(j));
    }
    if (!obj.contains("strength")) {
      throw config_error("coupling topology '" + topology +
                         "' requires a 'strength'");
    }
    const double strength = get_number(obj, "strength", "coupling");
    if (topology == "all_to_all") return CouplingGraph::all_to_all(n, strength);
    if (topology == "nearest_neighbour") {
      return CouplingGraph::nearest_neighbour(n, strength);
    }
    throw config_error("unknown coupling topology '" + topology + "'");
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
}

AxisGrid parse_axis_grid(const json& obj) {
  AxisGrid g;
  if (obj.contains("values")) {
    if (!obj.at("values").is_array() || obj.at("values").empty()) {
      throw config_error("axis 'values' must be a non-empty array");
    }
    for (const auto& v : obj.at("values")) {
      if (!v.is_number()) {
        throw config_error("axis 'values' entries must be numbers");
      }
      g.values.push_back(v.get<double>());
    }
    return g;
  }
  for (const char* k : {"min", "max", "points"}) {
    if (!obj.contains(k)) {
      throw config_error("axis requires 'min', 'max' and 'points' (or 'values')");
    }
  }
  g.lo = get_number(obj, "min", "axis");
  g.hi = get_number(obj, "max", "axis");
  g.points = static_cast<int>(get_number(obj, "points", "axis"));
  if (obj.contains("log")) {
    if (!obj.at("log").is_boolean()) {
      throw config_error("axis 'log' must be a boolean");
    }
    g.log_scale = obj.at("log").get<bool>();
  }
  return g;
}

FileConfig parse_config_json(const json& doc) {
  if (!doc.is_object()) {
    throw config_error("configuration root must be an object");
  }
  check_keys(doc, "configuration",
             {"scenario", "name", "qubits", "coupling", "initial_state",
              "grid", "analysis_time", "axis", "norm_floor", "output",
              "search"});

  FileConfig fc;
  bool have_scenario = false;
  if (doc.contains("scenario")) {
    fc.scenario = preset(get_string(doc, "scenario", "configuration"));
    have_scenario = true;
  }
  Scenario& s = fc.scenario;

  if (doc.contains("name")) s.name = get_string(doc, "name", "configuration");
  if (doc.contains("qubits")) s.qubits = parse_qubits(doc.at("qubits"));
  if (doc.contains("coupling")) {
    if (s.qubits.empty()) {
      throw config_error("'coupling' requires 'qubits' (or a preset scenario)");
    }
    s.coupling = parse_coupling(doc.at("coupling"), s.n());
  }
  if (!have_scenario && (s.qubits.empty() || s.coupling.n == 0)) {
    throw config_error(
        "configuration needs either a 'scenario' preset or inline 'qubits' "
        "and 'coupling'");
  }
  if (s.coupling.n != s.n()) {
    throw config_error("coupling graph is over " +
                       std::to_string(s.coupling.n) + " qubits but " +
                       std::to_string(s.n()) + " qubit entries were given");
  }
  try {
    for (const auto& q : s.qubits) validate(q);
    validate(s.coupling);
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }

  if (doc.contains("initial_state")) {
    s.initial = initial_state_from_string(
        get_string(doc, "initial_state", "configuration"));
  }
  if (doc.contains("grid")) {
    const auto& g = doc.at("grid");
    if (!g.is_object()) throw config_error("'grid' must be an object");
    check_keys(g, "grid", {"t_min", "t_max", "dt"});
    if (g.contains("t_min")) s.t_min = get_number(g, "t_min", "grid");
    if (g.contains("t_max")) s.t_max = get_number(g, "t_max", "grid");
    if (g.contains("dt")) s.dt = get_number(g, "dt", "grid");
  }
  if (doc.contains("analysis_time")) {
    s.analysis_time = get_number(doc, "analysis_time", "configuration");
  }
  if (doc.contains("axis")) {
    const auto& a = doc.at("axis");
    if (!a.is_object()) throw config_error("'axis' must be an object");
    check_keys(a, "axis", {"name", "min", "max", "points", "log", "values"});
    if (!a.contains("name")) throw config_error("axis requires a 'name'");
    s.axis = sweep_axis_from_string(get_string(a, "name", "axis"));
    if (s.axis != SweepAxis::Time) {
      s.axis1 = parse_axis_grid(a);
      if (s.axis == SweepAxis::J12xJ23) s.axis2 = s.axis1;
    }
  }
  if (doc.contains("norm_floor")) {
    s.norm_floor = get_number(doc, "norm_floor", "configuration");
    if (!(s.norm_floor > 0.0)) {
      throw config_error("'norm_floor' must be positive");
    }
  }
  if (doc.contains("output")) {
    const auto& o = doc.at("output");
    if (!o.is_object()) throw config_error("'output' must be an object");
    check_keys(o, "output", {"dir", "format"});
    if (o.contains("dir")) fc.out_dir = get_string(o, "dir", "output");
    if (o.contains("format")) {
      fc.format = output_format_from_string(get_string(o, "format", "output"));
    }
  }
  if (doc.contains("search")) {
    const auto& o = doc.at("search");
    if (!o.is_object()) throw config_error("'search' must be an object");
    check_keys(o, "search", {"grid_dt", "window", "objective", "omega_step"});
    if (o.contains("grid_dt")) {
      fc.search_grid_dt = get_number(o, "grid_dt", "search");
    }
    if (o.contains("omega_step")) {
      fc.omega_step = get_number(o, "omega_step", "search");
    }
    if (o.contains("objective")) {
      fc.objective =
          objective_from_string(get_string(o, "objective", "search"));
    }
    if (o.contains("window")) {
      const auto& w = o.at("window");
      if (!w.is_array() || w.size() != 2 || !w[0].is_number() ||
          !w[1].is_number()) {
        throw config_error("search 'window' must be [lo, hi]");
      }
      fc.search_window = {w[0].get<double>(), w[1].get<double>()};
    }
  }
  return fc;
}

}  // namespace

FileConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("JSON parse error: ") + e.what());
  }
  try {
    return parse_config_json(doc);
  } catch (const json::exception& e) {
    throw config_error(std::string("invalid configuration: ") + e.what());
  }
}

FileConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) {
    throw config_error("cannot read configuration file '" + path.string() +
                       "'");
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace nhqsim
