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

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nhqsim/config.hpp"
#include "nhqsim/dynamics.hpp"
#include "nhqsim/entanglement.hpp"
#include "nhqsim/experiments.hpp"
#include "nhqsim/hamiltonian.hpp"
#include "nhqsim/output.hpp"
#include "nhqsim/version.hpp"

namespace {

using nlohmann::json;
using namespace nhqsim;

struct Options {
  std::string preset_name;
  std::string config_path;
  std::string out_dir;
  std::string format;
  std::string name;
  int n = 0;
  std::string delta, gamma, omega;  // comma-separated, broadcast when single
  std::string topology;
  std::optional<double> j_strength;
  std::string initial;
  std::optional<double> t_min, t_max, dt, analysis_time, norm_floor;
  // optimize
  std::string search = "time";
  std::string objective;
  std::vector<double> window;
  std::optional<double> grid_dt;
  std::optional<double> omega_lo, omega_hi, omega_step;
  bool json_output = false;
};

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw config_error(std::string("cannot parse number '") + tok +
                         "' for " + flag);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void apply_per_qubit(std::vector<QubitParams>& qubits, const std::string& text,
                     const char* flag, double QubitParams::* field) {
  const auto values = parse_list(text, flag);
  if (values.size() == 1) {
    for (auto& q : qubits) q.*field = values[0];
  } else if (values.size() == qubits.size()) {
    for (size_t i = 0; i < qubits.size(); ++i) qubits[i].*field = values[i];
  } else {
    throw config_error(std::string(flag) + " needs one value or one per qubit");
  }
}

FileConfig resolve(const Options& o) {
  if (!o.preset_name.empty() && !o.config_path.empty()) {
    throw config_error("give either --preset or --config, not both");
  }
  FileConfig fc;
  if (!o.config_path.empty()) {
    fc = parse_config_file(o.config_path);
  } else if (!o.preset_name.empty()) {
    fc.scenario = preset(o.preset_name);
  } else {
    const int n = o.n > 0 ? o.n : 3;
    fc.scenario.qubits.assign(n, QubitParams{});
    fc.scenario.coupling = CouplingGraph::none(n);
  }
  Scenario& s = fc.scenario;

  if (o.n > 0 && o.n != s.n()) {
    if (!o.preset_name.empty() || !o.config_path.empty()) {
      throw config_error("--n conflicts with the configured qubit count");
    }
  }
  if (!o.name.empty()) s.name = o.name;
  if (!o.delta.empty()) apply_per_qubit(s.qubits, o.delta, "--delta", &QubitParams::delta);
  if (!o.gamma.empty()) apply_per_qubit(s.qubits, o.gamma, "--gamma", &QubitParams::gamma);
  if (!o.omega.empty()) apply_per_qubit(s.qubits, o.omega, "--omega", &QubitParams::omega);
  if (!o.topology.empty() || o.j_strength) {
    const std::string topology = o.topology.empty() ? "all_to_all" : o.topology;
    if (!o.j_strength) {
      throw config_error("--topology requires --J");
    }
    if (topology == "all_to_all") {
      s.coupling = CouplingGraph::all_to_all(s.n(), *o.j_strength);
    } else if (topology == "nearest_neighbour") {
      s.coupling = CouplingGraph::nearest_neighbour(s.n(), *o.j_strength);
    } else {
      throw config_error("unknown topology '" + topology + "'");
    }
  }
  if (!o.initial.empty()) s.initial = initial_state_from_string(o.initial);
  if (o.t_min) s.t_min = *o.t_min;
  if (o.t_max) s.t_max = *o.t_max;
  if (o.dt) s.dt = *o.dt;
  if (o.analysis_time) s.analysis_time = *o.analysis_time;
  if (o.norm_floor) s.norm_floor = *o.norm_floor;

  if (!o.out_dir.empty()) fc.out_dir = o.out_dir;
  if (!o.format.empty()) fc.format = output_format_from_string(o.format);
  if (!o.objective.empty()) fc.objective = objective_from_string(o.objective);
  if (!o.window.empty()) {
    if (o.window.size() != 2) throw config_error("--window needs LO HI");
    fc.search_window = {o.window[0], o.window[1]};
  }
  if (o.grid_dt) fc.search_grid_dt = *o.grid_dt;
  if (o.omega_step) fc.omega_step = *o.omega_step;

  try {
    for (const auto& q : s.qubits) validate(q);
    validate(s.coupling);
  } catch (const std::invalid_argument& e) {
    throw config_error(e.what());
  }
  return fc;
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--preset", o.preset_name, "built-in scenario name");
  cmd->add_option("--config", o.config_path, "JSON configuration file");
  cmd->add_option("--out", o.out_dir, "output root directory");
  cmd->add_option("--format", o.format, "csv or json");
  cmd->add_option("--name", o.name, "scenario name used for the output directory");
  cmd->add_option("--n", o.n, "qubit count for inline scenarios (default 3)");
  cmd->add_option("--delta", o.delta, "detuning rad/us (single or comma list)");
  cmd->add_option("--gamma", o.gamma, "loss rate rad/us (single or comma list)");
  cmd->add_option("--omega", o.omega, "drive amplitude rad/us (single or comma list)");
  cmd->add_option("--topology", o.topology, "all_to_all or nearest_neighbour");
  cmd->add_option("--J", o.j_strength, "coupling strength rad/us");
  cmd->add_option("--initial", o.initial, "initial state: coherent or all_f");
  cmd->add_option("--t-min", o.t_min, "time grid start, us");
  cmd->add_option("--t-max", o.t_max, "time grid end, us");
  cmd->add_option("--dt", o.dt, "time grid step, us");
  cmd->add_option("--analysis-time", o.analysis_time,
                  "evaluation time for parameter sweeps, us");
  cmd->add_option("--norm-floor", o.norm_floor, "post-selection norm floor");
}

// Pairwise concurrences plus entropies for qubit counts without the full
// three-qubit report.
void write_measures_csv(const std::filesystem::path& file,
                        const Trajectory& traj) {
  std::ofstream f(file);
  if (!f) throw std::runtime_error("cannot open '" + file.string() + "'");
  const int n = traj.states.empty() ? 0 : traj.states.front().n;
  f << "t_us";
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) f << ",C" << a << b;
  for (int a = 1; a <= n; ++a) f << ",S" << a;
  f << ",raw_norm\n";
  for (size_t i = 0; i < traj.states.size(); ++i) {
    f << format_number(traj.times_us[i]);
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        f << ','
          << format_number(concurrence(pair_density(traj.states[i], a, b)));
      }
    }
    for (int a = 1; a <= n; ++a) {
      f << ',' << format_number(entropy(partial_trace(traj.states[i], {a})));
    }
    f << ',' << format_number(traj.raw_norms[i]) << '\n';
  }
}

int cmd_simulate(const Options& o) {
  FileConfig fc = resolve(o);
  const Scenario& s = fc.scenario;
  if (s.axis != SweepAxis::Time) {
    throw config_error("scenario '" + s.name +
                       "' sweeps a parameter axis; use the sweep command");
  }
  const OutputFormat format = fc.format.value_or(OutputFormat::Csv);
  const auto dir = output_root(fc.out_dir) / s.name;
  std::vector<std::string> outputs;

  Trajectory traj = scenario_trajectory(s);
  const bool json_mode = format == OutputFormat::Json;
  const std::string traj_name = json_mode ? "trajectory.json" : "trajectory.csv";
  if (json_mode) {
    write_trajectory_json(dir / traj_name, traj);
  } else {
    write_trajectory_csv(dir / traj_name, traj);
  }
  outputs.push_back(traj_name);

  if (s.n() == 3) {
    std::vector<EntanglementReport> reports;
    reports.reserve(traj.states.size());
    for (size_t i = 0; i < traj.states.size(); ++i) {
      reports.push_back(
          report(traj.states[i], traj.times_us[i], s.thresholds));
    }
    const std::string report_name = json_mode ? "report.json" : "report.csv";
    if (json_mode) {
      write_report_json(dir / report_name, reports);
    } else {
      write_report_csv(dir / report_name, reports);
    }
    outputs.push_back(report_name);
  } else {
    write_measures_csv(dir / "measures.csv", traj);
    outputs.push_back("measures.csv");
  }
  write_meta_json(dir / "meta.json", s, outputs, traj.states.size(),
                  traj.terminated);
  outputs.push_back("meta.json");

  for (const auto& name : outputs) {
    std::cout << "wrote " << (dir / name).string() << '\n';
  }
  if (traj.terminated) {
    std::cerr << "note: trajectory terminated early (post-selection vanished)\n";
  }
  return 0;
}

int cmd_sweep(const Options& o) {
  FileConfig fc = resolve(o);
  const Scenario& s = fc.scenario;
  if (s.axis == SweepAxis::Time) {
    throw config_error("scenario '" + s.name +
                       "' runs on a time grid; use the simulate command");
  }
  const OutputFormat format = fc.format.value_or(OutputFormat::Csv);
  const auto dir = output_root(fc.out_dir) / s.name;
  SweepResult result = run_scenario(s);

  const std::string sweep_name =
      to_string(s.axis) + (format == OutputFormat::Json ? ".json" : ".csv");
  if (format == OutputFormat::Json) {
    write_sweep_json(dir / sweep_name, result);
  } else {
    write_sweep_csv(dir / sweep_name, result);
  }
  write_meta_json(dir / "meta.json", result, {sweep_name});
  std::cout << "wrote " << (dir / sweep_name).string() << '\n';
  std::cout << "wrote " << (dir / "meta.json").string() << '\n';
  return 0;
}

int cmd_optimize(const Options& o) {
  FileConfig fc = resolve(o);
  const Scenario& s = fc.scenario;
  json out;
  if (o.search == "time") {
    const Objective objective = fc.objective.value_or(Objective::MaxTau);
    const auto [lo, hi] =
        fc.search_window.value_or(std::make_pair(s.t_min, s.t_max));
    Optimum opt = find_optimal_time(s, lo, hi, objective, fc.search_grid_dt);
    out["t_star"] = round_to_output_precision(opt.t_us);
    out["value"] = round_to_output_precision(opt.value);
    out["objective"] = to_string(objective);
  } else if (o.search == "omega") {
    double gamma = 0.0;
    for (const auto& q : s.qubits) gamma = std::max(gamma, q.gamma);
    const auto [lo, hi] = fc.search_window.value_or(std::make_pair(0.0, -1.0));
    DriveOptimum opt = find_optimal_drive(
        gamma, s.coupling, lo, hi, o.omega_lo.value_or(0.0),
        o.omega_hi.value_or(0.0), fc.omega_step);
    out["omega_star"] = round_to_output_precision(opt.omega);
    out["t_star"] = round_to_output_precision(opt.t_us);
    out["value"] = round_to_output_precision(opt.value);
  } else {
    throw config_error("--search must be time or omega");
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_list_presets(bool as_json) {
  if (as_json) {
    json arr = json::array();
    for (const auto& p : preset_list()) {
      arr.push_back({{"name", p.name}, {"description", p.description}});
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& p : preset_list()) {
      std::cout << p.name << "\t" << p.description << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"driven lossy qubit entanglement simulator"};
  app.set_version_flag("--version", nhqsim::kVersion);
  app.require_subcommand(1);

  Options o;
  int rc = 0;

  auto* simulate = app.add_subcommand(
      "simulate", "propagate one scenario over its time grid");
  add_common_options(simulate, o);
  simulate->callback([&] { rc = cmd_simulate(o); });

  auto* sweep =
      app.add_subcommand("sweep", "evaluate a scenario over a parameter axis");
  add_common_options(sweep, o);
  sweep->callback([&] { rc = cmd_sweep(o); });

  auto* optimize = app.add_subcommand(
      "optimize", "locate optimal times or drive amplitudes");
  add_common_options(optimize, o);
  optimize->add_option("--search", o.search, "time (default) or omega");
  optimize->add_option("--objective", o.objective,
                       "max_tau, min_max_pairwise_concurrence, "
                       "max_min_entropy or max_pairwise_concurrence");
  optimize->add_option("--window", o.window, "search window LO HI (us)")
      ->expected(2);
  optimize->add_option("--grid-dt", o.grid_dt, "search grid step (us)");
  optimize->add_option("--omega-lo", o.omega_lo, "drive search lower bound");
  optimize->add_option("--omega-hi", o.omega_hi, "drive search upper bound");
  optimize->add_option("--omega-step", o.omega_step, "drive search grid step");
  optimize->callback([&] { rc = cmd_optimize(o); });

  auto* list = app.add_subcommand("list-presets", "show built-in scenarios");
  list->add_flag("--json", o.json_output, "machine-readable output");
  list->callback([&] { rc = cmd_list_presets(o.json_output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nhqsim::config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const nhqsim::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return rc;
}
