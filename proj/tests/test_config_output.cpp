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

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nhqsim/config.hpp"
#include "nhqsim/output.hpp"

using namespace nhqsim;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("inline configuration parses") {
  const char* text = R"({
    "name": "two_qubit",
    "qubits": [
      {"delta": 0, "gamma": 6, "omega": 1.576},
      {"delta": 0, "gamma": 6, "omega": 1.576}
    ],
    "coupling": {"topology": "all_to_all", "strength": 1e-3},
    "initial_state": "coherent",
    "grid": {"t_min": 0, "t_max": 4, "dt": 0.01},
    "output": {"dir": "elsewhere", "format": "json"}
  })";
  FileConfig fc = parse_config_text(text);
  CHECK(fc.scenario.name == "two_qubit");
  CHECK(fc.scenario.n() == 2);
  CHECK(fc.scenario.coupling.j(0, 1) == 1e-3);
  CHECK(fc.scenario.t_max == 4.0);
  CHECK(fc.out_dir == "elsewhere");
  CHECK(fc.format == OutputFormat::Json);
}

TEST_CASE("preset reference with overrides") {
  const char* text = R"({
    "scenario": "fig1a",
    "grid": {"t_max": 2.0},
    "search": {"window": [3.0, 3.5], "objective": "max_tau"}
  })";
  FileConfig fc = parse_config_text(text);
  CHECK(fc.scenario.qubits[0].omega == 1.576);
  CHECK(fc.scenario.t_max == 2.0);
  REQUIRE(fc.search_window.has_value());
  CHECK(fc.search_window->second == 3.5);
  CHECK(fc.objective == Objective::MaxTau);
}

TEST_CASE("unknown keys are rejected with their name") {
  CHECK_THROWS_WITH_AS(parse_config_text(R"({"scenario": "fig1a", "frob": 1})"),
                       doctest::Contains("frob"), config_error);
  CHECK_THROWS_WITH_AS(
      parse_config_text(
          R"({"scenario": "fig1a", "grid": {"t_stop": 8}})"),
      doctest::Contains("t_stop"), config_error);
  CHECK_THROWS_WITH_AS(
      parse_config_text(
          R"({"qubits": [{"gamma": 6, "loss": 1}],
              "coupling": {"topology": "all_to_all", "strength": 0}})"),
      doctest::Contains("loss"), config_error);
}

TEST_CASE("configuration errors carry diagnostics") {
  CHECK_THROWS_WITH_AS(parse_config_text("{nope"),
                       doctest::Contains("parse error"), config_error);
  CHECK_THROWS_AS(parse_config_text(R"({"scenario": "figZZ"})"), config_error);
  CHECK_THROWS_WITH_AS(
      parse_config_text(
          R"({"qubits": [{"gamma": 6}, {"gamma": 6}],
              "coupling": {"topology": "custom",
                           "matrix": [[0, 1e-3], [2e-3, 0]]}})"),
      doctest::Contains("asymmetric between qubits 1 and 2"), config_error);
  CHECK_THROWS_WITH_AS(
      parse_config_text(
          R"({"qubits": [{"gamma": -2}],
              "coupling": {"topology": "all_to_all", "strength": 0}})"),
      doctest::Contains("gamma"), config_error);
  CHECK_THROWS_AS(
      parse_config_text(
          R"({"qubits": [{"gamma": 6}],
              "coupling": {"topology": "ring", "strength": 1}})"),
      config_error);
}

TEST_CASE("numbers serialize with twelve significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(8.0) == "8");
  CHECK(format_number(-1.23456789012345e-7) == "-1.23456789012e-07");
  CHECK(round_to_output_precision(1.0 / 3.0) ==
        std::strtod("0.333333333333", nullptr));
}

TEST_CASE("output root resolution order") {
  unsetenv("NHE_OUT_DIR");
  CHECK(output_root({}) == std::filesystem::path("out"));
  setenv("NHE_OUT_DIR", "/tmp/envroot", 1);
  CHECK(output_root({}) == std::filesystem::path("/tmp/envroot"));
  CHECK(output_root(std::string("flag_wins")) ==
        std::filesystem::path("flag_wins"));
  unsetenv("NHE_OUT_DIR");
}

TEST_CASE("csv headers match the file contracts") {
  const auto dir = std::filesystem::temp_directory_path() / "nhqsim_csv";
  std::filesystem::create_directories(dir);

  Scenario s = preset("fig1a");
  s.t_max = 0.1;
  Trajectory traj = scenario_trajectory(s);
  write_trajectory_csv(dir / "trajectory.csv", traj);
  std::istringstream tf(slurp(dir / "trajectory.csv"));
  std::string header;
  std::getline(tf, header);
  CHECK(header ==
        "t_us,re_a1,re_a2,re_a3,re_a4,re_a5,re_a6,re_a7,re_a8,"
        "im_a1,im_a2,im_a3,im_a4,im_a5,im_a6,im_a7,im_a8,raw_norm");

  std::vector<EntanglementReport> reports;
  for (size_t i = 0; i < traj.states.size(); ++i) {
    reports.push_back(report(traj.states[i], traj.times_us[i]));
  }
  write_report_csv(dir / "report.csv", reports);
  std::istringstream rf(slurp(dir / "report.csv"));
  std::getline(rf, header);
  CHECK(header == "t_us,C12,C13,C23,tau,S1,S2,S3,class");

  std::filesystem::remove_all(dir);
}

TEST_CASE("csv and json outputs decode to identical values") {
  const auto dir = std::filesystem::temp_directory_path() / "nhqsim_eq";
  std::filesystem::create_directories(dir);

  Scenario s = preset("fig1a");
  s.t_max = 0.05;
  Trajectory traj = scenario_trajectory(s);
  std::vector<EntanglementReport> reports;
  for (size_t i = 0; i < traj.states.size(); ++i) {
    reports.push_back(report(traj.states[i], traj.times_us[i]));
  }
  write_report_csv(dir / "report.csv", reports);
  write_report_json(dir / "report.json", reports);

  json parsed = json::parse(slurp(dir / "report.json"));
  std::istringstream csv(slurp(dir / "report.csv"));
  std::string line;
  std::getline(csv, line);  // header
  size_t row = 0;
  while (std::getline(csv, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> fields;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    REQUIRE(fields.size() == 9);
    const json& obj = parsed.at(row);
    CHECK(std::strtod(fields[1].c_str(), nullptr) ==
          obj.at("C12").get<double>());
    CHECK(std::strtod(fields[4].c_str(), nullptr) ==
          obj.at("tau").get<double>());
    CHECK(std::strtod(fields[5].c_str(), nullptr) ==
          obj.at("S1").get<double>());
    CHECK(fields[8] == obj.at("class").get<std::string>());
    ++row;
  }
  CHECK(row == parsed.size());
  std::filesystem::remove_all(dir);
}

TEST_CASE("scenario serialization round-trips through the config parser") {
  for (const auto& info : preset_list()) {
    Scenario original = preset(info.name);
    const std::string text = scenario_to_json_text(original);
    FileConfig reparsed = parse_config_text(text);
    CHECK(scenario_to_json_text(reparsed.scenario) == text);
  }
}

TEST_CASE("meta file reproduces the resolved scenario") {
  const auto dir = std::filesystem::temp_directory_path() / "nhqsim_meta";
  std::filesystem::create_directories(dir);
  Scenario s = preset("fig2b");
  SweepResult result = run_scenario(s);
  write_meta_json(dir / "meta.json", result, {"delta.csv"});

  json meta = json::parse(slurp(dir / "meta.json"));
  FileConfig back = parse_config_text(meta.at("scenario").dump());
  CHECK(scenario_to_json_text(back.scenario) == scenario_to_json_text(s));
  CHECK(meta.at("hamiltonian").size() == 64);  // row-major re/im pairs
  CHECK(meta.at("hamiltonian").at(0).size() == 2);
  std::filesystem::remove_all(dir);
}
