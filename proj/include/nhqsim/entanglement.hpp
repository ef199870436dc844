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

#include <string>
#include <vector>

#include "nhqsim/state.hpp"
#include "nhqsim/types.hpp"

namespace nhqsim {

/// Reduced density matrix over the kept qubits (1-based indices, any order;
/// rows/columns ordered with the lowest kept index as the most significant
/// bit). Requires a normalized state and a strict subset of the qubits.
Matrix partial_trace(const StateVector& psi, const std::vector<int>& keep);

/// Joint density matrix of qubits a and b: a partial trace for n > 2, the
/// full projector |psi><psi| for a two-qubit state.
Matrix pair_density(const StateVector& psi, int a, int b);

/// Two-qubit concurrence: max{0, l1-l2-l3-l4} with l_i the descending square
/// roots of the eigenvalues of rho * (YY rho* YY).
double concurrence(const Matrix& rho_2q);

/// Residual three-tangle of a normalized three-qubit pure state, evaluated
/// from the basis amplitudes via the degree-4 polynomial invariant. Vanishes
/// for W and biseparable states, reaches 1 for GHZ.
double three_tangle(const StateVector& psi);

/// Von Neumann entropy -sum p ln p of a single-qubit density matrix,
/// natural logarithm, eigenvalues clamped to [0, 1].
double entropy(const Matrix& rho_1q);

enum class StateClass { GhzLike, WLike, Biseparable, Separable, Unclassified };

std::string to_string(StateClass c);

/// Signature windows used to label a three-qubit state from its measures.
struct ClassificationThresholds {
  double ghz_tau = 0.9;
  double ghz_max_concurrence = 0.1;
  double w_tau = 0.1;
  double w_min_entropy = 0.5;
  double w_signature_window = 0.1;
  double separable_entropy = 0.05;
  double biseparable_entropy = 0.5;
};

struct EntanglementReport {
  double t_us = 0.0;
  double c12 = 0.0, c13 = 0.0, c23 = 0.0;
  double tau = 0.0;
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  StateClass cls = StateClass::Unclassified;

  double max_concurrence() const;
  double min_entropy() const;
  double mean_entropy() const;
};

/// All measures of a normalized three-qubit state at time t.
EntanglementReport report(const StateVector& psi, double t_us,
                          const ClassificationThresholds& thresholds = {});

}  // namespace nhqsim
