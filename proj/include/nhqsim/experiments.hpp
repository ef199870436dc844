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

#include <optional>
#include <string>
#include <vector>

#include "nhqsim/dynamics.hpp"
#include "nhqsim/entanglement.hpp"
#include "nhqsim/state.hpp"
#include "nhqsim/types.hpp"

namespace nhqsim {

enum class InitialState { CoherentSuperposition, AllF };
enum class SweepAxis { Time, Omega, Delta, J12, J12xJ23 };

std::string to_string(InitialState s);
std::string to_string(SweepAxis a);

/// One sweep axis: either an explicit value list or a lo..hi grid, linear or
/// logarithmic, endpoints included.
struct AxisGrid {
  double lo = 0.0;
  double hi = 0.0;
  int points = 0;
  bool log_scale = false;
  std::vector<double> values;  // explicit grid wins when non-empty

  std::vector<double> grid() const;
};

/// A fully resolved simulation setup: qubits, coupling, initial state and
/// either a time grid or a parameter axis evaluated at a fixed time.
struct Scenario {
  std::string name = "custom";
  std::string description;
  std::vector<QubitParams> qubits;
  CouplingGraph coupling;
  InitialState initial = InitialState::CoherentSuperposition;
  SweepAxis axis = SweepAxis::Time;
  double t_min = 0.0, t_max = 8.0, dt = 0.01;  // time axis
  double analysis_time = 3.23;                 // fixed-time parameter sweeps
  AxisGrid axis1, axis2;
  double norm_floor = kNormFloor;
  ClassificationThresholds thresholds;

  int n() const { return static_cast<int>(qubits.size()); }
  std::vector<double> time_grid() const;
  Matrix hamiltonian() const;
  StateVector initial_state() const;
};

struct SweepPoint {
  double axis1 = 0.0;
  double axis2 = 0.0;
  EntanglementReport report;
  double raw_norm = 1.0;
  std::string phase;   // filled for omega sweeps
  bool failed = false; // post-selection vanished at this point
};

struct SweepResult {
  Scenario scenario;
  std::vector<SweepPoint> points;
  bool terminated = false;  // time sweep stopped before the grid end
  std::optional<double> phase_boundary_omega;
};

/// Built-in parameter sets reproducing the reference configurations.
struct PresetInfo {
  std::string name;
  std::string description;
};

std::vector<PresetInfo> preset_list();
Scenario preset(const std::string& name);

/// Runs a scenario point by point through propagation + post-selection +
/// entanglement measures. Per-point post-selection failures are recorded in
/// the result, not raised. Output is deterministic in axis order.
SweepResult run_scenario(const Scenario& s);

/// Stepped propagation over the scenario's time grid (any qubit count).
Trajectory scenario_trajectory(const Scenario& s);

enum class Objective {
  MaxTau,
  MinMaxPairwiseConcurrence,
  MaxMinEntropy,
  MaxPairwiseConcurrence,
};

std::string to_string(Objective o);

struct Optimum {
  double t_us = 0.0;
  double value = 0.0;
};

/// Grid search at grid_dt over [lo, hi] followed by golden-section
/// refinement around the best grid point.
Optimum find_optimal_time(const Scenario& s, double window_lo,
                          double window_hi, Objective objective,
                          double grid_dt = 0.005);

struct DriveOptimum {
  double omega = 0.0;
  double value = 0.0;  // best tangle (or concurrence for n = 2)
  double t_us = 0.0;   // time at which the best value occurs
};

/// Scans the drive amplitude above the exceptional point and returns the
/// value whose first tangle peak (concurrence peak for two qubits) within
/// the time window is highest. Scoring the first peak rather than the
/// window-wide maximum keeps later post-selected revivals from biasing the
/// search. Passing t_hi <= 0 selects a per-omega window of 1.25 oscillation
/// periods.
DriveOptimum find_optimal_drive(double gamma, const CouplingGraph& coupling,
                                double t_lo, double t_hi,
                                double omega_lo = 0.0, double omega_hi = 0.0,
                                double omega_step = 1e-3);

/// Entanglement measures versus uniform drive amplitude at a fixed time,
/// with the phase of each point annotated against the omega = gamma/4
/// boundary.
SweepResult phase_sweep(double omega_lo, double omega_hi, double omega_step,
                        double gamma, double j, double t_us, int n = 3);

struct TimescaleResult {
  double t_nh = 0.0;     // first tangle peak of the lossy system
  double t_h = 0.0;      // GHZ-signature time of the undriven Hermitian system
  double omega_nh = 0.0; // drive used on the lossy side
  double ratio = 0.0;    // t_nh / t_h
};

/// Compares optimal entanglement generation times between the lossy driven
/// system and the undriven Hermitian system at the same coupling. The lossy
/// side is timed at its first tangle peak, the Hermitian side at the first
/// appearance of the GHZ signature. When no drive is given it is located
/// with find_optimal_drive.
TimescaleResult timescale_comparison(double j, double gamma = 6.0,
                                     std::optional<double> omega_nh = {});

enum class PeakMeasure { Tau, MeanEntropy };

/// First local maximum of the measure on the grid, refined by golden
/// section; peaks below prominence * (global max) are skipped.
Optimum first_peak_time(const Scenario& s, double window_lo, double window_hi,
                        PeakMeasure measure, double grid_dt = 0.005,
                        double prominence = 0.5);

/// First grid time at which the state classifies as the target signature.
std::optional<double> first_class_time(const Scenario& s, StateClass target,
                                       double window_lo, double window_hi,
                                       double grid_dt = 0.005);

}  // namespace nhqsim
