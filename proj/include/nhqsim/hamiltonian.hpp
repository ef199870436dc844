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

#include <vector>

#include "nhqsim/types.hpp"

namespace nhqsim {

/// Assembles the dense 2^n x 2^n effective Hamiltonian
///   H = sum_j [(delta_j - i gamma_j/2) |e><e|_j + omega_j sigma_j^x]
///     + sum_{j<k} J_jk (|ef><fe| + |fe><ef|)_{jk}
/// in the fixed basis ordering of state.hpp. J_jk is the full hopping
/// amplitude of each unordered pair.
Matrix build_hamiltonian(const std::vector<QubitParams>& qubits,
                         const CouplingGraph& coupling);

/// Closed-form phase of a single uncoupled qubit on the delta = 0 line:
/// PT-symmetric above omega = gamma/4, broken below, exceptional point at
/// the boundary within a relative tolerance. The period is filled only in
/// the symmetric phase.
PhaseClassification classify_phase(const QubitParams& q, double tol = 1e-9);

/// Oscillation period 4 pi / sqrt(16 omega^2 - gamma^2), defined in the
/// PT-symmetric phase only.
double evolution_period(const QubitParams& q);

}  // namespace nhqsim
