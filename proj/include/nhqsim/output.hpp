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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nhqsim/dynamics.hpp"
#include "nhqsim/experiments.hpp"

namespace nhqsim {

/// 12 significant digits: diff-stable while exceeding every test tolerance.
std::string format_number(double v);

/// The double that format_number's decimal form parses back to. CSV and JSON
/// outputs both carry these values, so the two formats decode identically.
double round_to_output_precision(double v);

/// Output root directory: explicit override > NHE_OUT_DIR > "out".
std::filesystem::path output_root(const std::optional<std::string>& override_dir);

void write_trajectory_csv(const std::filesystem::path& file,
                          const Trajectory& traj);
void write_trajectory_json(const std::filesystem::path& file,
                           const Trajectory& traj);

void write_report_csv(const std::filesystem::path& file,
                      const std::vector<EntanglementReport>& reports);
void write_report_json(const std::filesystem::path& file,
                       const std::vector<EntanglementReport>& reports);

void write_sweep_csv(const std::filesystem::path& file,
                     const SweepResult& result);
void write_sweep_json(const std::filesystem::path& file,
                      const SweepResult& result);

/// Resolved parameters, tool version, output list and the assembled
/// Hamiltonian (row-major re/im pairs). Contains no clocks or hostnames, so
/// identical configurations write identical bytes.
void write_meta_json(const std::filesystem::path& file, const Scenario& s,
                     const std::vector<std::string>& outputs,
                     std::size_t points, bool terminated,
                     std::optional<double> phase_boundary = {});
void write_meta_json(const std::filesystem::path& file,
                     const SweepResult& result,
                     const std::vector<std::string>& outputs);

/// Scenario serialization used inside meta.json; parsing the result back
/// through the config module reproduces the identical resolved scenario.
std::string scenario_to_json_text(const Scenario& s);

}  // namespace nhqsim
