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

#include "nhqsim/experiments.hpp"

namespace nhqsim {

enum class OutputFormat { Csv, Json };

std::string to_string(OutputFormat f);
OutputFormat output_format_from_string(const std::string& s);
InitialState initial_state_from_string(const std::string& s);
SweepAxis sweep_axis_from_string(const std::string& s);
Objective objective_from_string(const std::string& s);

/// A parsed configuration file: the resolved scenario plus run options.
/// Every key is validated; unknown keys are rejected with their name.
struct FileConfig {
  Scenario scenario;
  std::optional<std::string> out_dir;
  std::optional<OutputFormat> format;
  double search_grid_dt = 0.005;
  std::optional<std::pair<double, double>> search_window;
  std::optional<Objective> objective;
  double omega_step = 1e-3;
};

FileConfig parse_config_text(const std::string& text);
FileConfig parse_config_file(const std::filesystem::path& path);

}  // namespace nhqsim
