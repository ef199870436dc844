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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace nhqsim {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr int kMaxQubits = 4;

/// Raised when a numerical procedure cannot deliver a usable result
/// (vanished post-selection norm, eigensolver failure).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for invalid user-supplied configuration.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-qubit parameters of a driven lossy two-level system. All angular
/// frequencies are in rad/us; gamma = 0 makes the qubit Hermitian.
struct QubitParams {
  double delta = 0.0;  // drive detuning
  double gamma = 0.0;  // loss rate of |e>, >= 0
  double omega = 0.0;  // Rabi drive amplitude, >= 0
};

void validate(const QubitParams& q);

/// Symmetric real inter-qubit coupling matrix J_jk in rad/us, zero diagonal.
struct CouplingGraph {
  int n = 0;
  RealMatrix j;

  static CouplingGraph none(int n);
  static CouplingGraph all_to_all(int n, double strength);
  static CouplingGraph nearest_neighbour(int n, double strength);
  static CouplingGraph single_pair(int n, int a, int b, double strength);
  static CouplingGraph custom(RealMatrix j);
};

void validate(const CouplingGraph& g);

enum class Phase { PTSymmetric, ExceptionalPoint, PTBroken };

std::string to_string(Phase p);

struct PhaseClassification {
  Phase phase = Phase::PTSymmetric;
  double period_us = 0.0;  // NaN outside the symmetric phase
};

}  // namespace nhqsim
