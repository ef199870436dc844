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

#include "nhqsim/state.hpp"

#include <cmath>

namespace nhqsim {

void validate(const StateVector& s) {
  if (s.n < 1 || s.n > kMaxQubits) {
    throw std::invalid_argument("state must cover between 1 and " +
                                std::to_string(kMaxQubits) + " qubits");
  }
  if (s.amps.size() != s.dim()) {
    throw std::invalid_argument("amplitude vector has wrong dimension");
  }
  if (!s.amps.allFinite()) {
    throw std::invalid_argument("state amplitudes must be finite");
  }
  const double nrm = s.norm();
  if (s.normalized) {
    if (std::abs(nrm - 1.0) > 1e-10) {
      throw std::invalid_argument("state flagged normalized has norm " +
                                  std::to_string(nrm));
    }
  } else if (!(nrm > 0.0)) {
    throw std::invalid_argument("zero-norm states are invalid");
  }
}

StateVector basis_state(int n, int index) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("invalid qubit count");
  }
  if (index < 0 || index >= (1 << n)) {
    throw std::invalid_argument("basis index out of range");
  }
  Vector a = Vector::Zero(1 << n);
  a(index) = 1.0;
  return {n, std::move(a), true};
}

StateVector from_amplitudes(int n, Vector amps) {
  StateVector s{n, std::move(amps), false};
  if (std::abs(s.norm() - 1.0) <= 1e-10) s.normalized = true;
  validate(s);
  return s;
}

StateVector coherent_superposition(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("invalid qubit count");
  }
  const double w = 1.0 / std::sqrt(2.0);
  const cxd c_e(0.0, -w);  // amplitude on |e>
  const cxd c_f(w, 0.0);   // amplitude on |f>
  const int dim = 1 << n;
  Vector a(dim);
  for (int s = 0; s < dim; ++s) {
    cxd amp = 1.0;
    for (int q = 1; q <= n; ++q) {
      amp *= (s >> qubit_bit(n, q)) & 1 ? c_f : c_e;
    }
    a(s) = amp;
  }
  return {n, std::move(a), true};
}

StateVector all_f(int n) { return basis_state(n, (1 << n) - 1); }

StateVector ghz_state(int n) {
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("invalid qubit count");
  }
  const double w = 1.0 / std::sqrt(2.0);
  Vector a = Vector::Zero(1 << n);
  a(0) = w;
  a((1 << n) - 1) = w;
  return {n, std::move(a), true};
}

StateVector w_state(int n) {
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("invalid qubit count");
  }
  const double w = 1.0 / std::sqrt(static_cast<double>(n));
  Vector a = Vector::Zero(1 << n);
  for (int q = 0; q < n; ++q) a(1 << q) = w;
  return {n, std::move(a), true};
}

}  // namespace nhqsim
