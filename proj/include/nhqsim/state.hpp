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

#include "nhqsim/types.hpp"

namespace nhqsim {

// Basis convention: a computational basis state is indexed by the integer
// whose binary digits (qubit 1 = most significant bit) read 0 for |e> and 1
// for |f>. Three qubits therefore run |eee>, |eef>, ..., |fff>.
inline int qubit_bit(int n, int qubit) { return n - qubit; }

struct StateVector {
  int n = 0;
  Vector amps;
  bool normalized = false;

  int dim() const { return 1 << n; }
  double norm() const { return amps.norm(); }
};

void validate(const StateVector& s);

StateVector basis_state(int n, int index);
StateVector from_amplitudes(int n, Vector amps);

/// Product state ((|f> - i|e>)/sqrt(2))^(x)n used as the default start.
StateVector coherent_superposition(int n);
/// |ff...f>
StateVector all_f(int n);
/// (|ee...e> + |ff...f>)/sqrt(2)
StateVector ghz_state(int n);
/// Equal superposition of the single-|f> basis states.
StateVector w_state(int n);

}  // namespace nhqsim
