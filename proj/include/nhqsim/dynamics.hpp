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

#include "nhqsim/state.hpp"
#include "nhqsim/types.hpp"

namespace nhqsim {

inline constexpr double kNormFloor = 1e-12;

/// e^{-iHt} psi0, unnormalized. Uses the scaling-and-squaring matrix
/// exponential, which stays valid at and across exceptional points where
/// the Hamiltonian is defective.
StateVector propagate(const Matrix& h, const StateVector& psi0, double t_us);

/// Post-selection step: rescale to unit norm. Fails when the norm has
/// dropped below the floor (the post-selection probability vanished).
StateVector normalize(const StateVector& psi, double norm_floor = kNormFloor);

/// Biorthogonal eigendecomposition of a (generally non-Hermitian) H.
/// Right vectors have unit Euclidean norm; left rows are scaled so that
/// left_j . right_k = delta_jk, with degenerate clusters biorthogonalized
/// blockwise. Near an exceptional point the system is ill-conditioned and
/// the decomposition is flagged unusable.
struct SpectralDecomposition {
  Vector eigenvalues;       // E_k, sorted by (Re, Im)
  Matrix right;             // columns |phi_k>, unit norm
  Matrix left;              // rows l_k with l_j . r_k = delta_jk
  Vector overlaps;          // a_k = l_k . psi0
  double condition_number = 1.0;   // cond2(right) * cond2(left)
  double pairing_distance = 0.0;   // max |E_right - E_left| over greedy pairs
  bool usable = true;              // false when condition_number > 1e12
};

inline constexpr double kUnusableCondition = 1e12;

SpectralDecomposition decompose(const Matrix& h, const StateVector& psi0);

/// Normalized states on a time grid, propagated step to step with
/// renormalization after every step (sequential post-selection). raw_norms
/// accumulates the product of step norms, i.e. |e^{-iHt} psi0| before any
/// normalization. A step whose norm ratio falls below the floor terminates
/// the trajectory early.
struct Trajectory {
  std::vector<double> times_us;
  std::vector<StateVector> states;
  std::vector<double> raw_norms;
  bool terminated = false;
};

Trajectory trajectory(const Matrix& h, const StateVector& psi0,
                      const std::vector<double>& t_grid_us,
                      double norm_floor = kNormFloor);

}  // namespace nhqsim
