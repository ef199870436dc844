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

#include "nhqsim/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nhqsim/state.hpp"

namespace nhqsim {

void validate(const QubitParams& q) {
  if (!std::isfinite(q.delta) || !std::isfinite(q.gamma) ||
      !std::isfinite(q.omega)) {
    throw std::invalid_argument("qubit parameters must be finite");
  }
  if (q.gamma < 0.0) {
    throw std::invalid_argument("loss rate gamma must be non-negative (" +
                                std::to_string(q.gamma) + " given)");
  }
  if (q.omega < 0.0) {
    throw std::invalid_argument("drive amplitude omega must be non-negative (" +
                                std::to_string(q.omega) + " given)");
  }
}

CouplingGraph CouplingGraph::none(int n) {
  return {n, RealMatrix::Zero(n, n)};
}

CouplingGraph CouplingGraph::all_to_all(int n, double strength) {
  CouplingGraph g = none(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) g.j(a, b) = strength;
  return g;
}

CouplingGraph CouplingGraph::nearest_neighbour(int n, double strength) {
  CouplingGraph g = none(n);
  for (int a = 0; a + 1 < n; ++a) {
    g.j(a, a + 1) = strength;
    g.j(a + 1, a) = strength;
  }
  return g;
}

CouplingGraph CouplingGraph::single_pair(int n, int a, int b, double strength) {
  if (a < 1 || a > n || b < 1 || b > n || a == b) {
    throw std::invalid_argument("invalid qubit pair for coupling");
  }
  CouplingGraph g = none(n);
  g.j(a - 1, b - 1) = strength;
  g.j(b - 1, a - 1) = strength;
  return g;
}

CouplingGraph CouplingGraph::custom(RealMatrix j) {
  CouplingGraph g{static_cast<int>(j.rows()), std::move(j)};
  validate(g);
  return g;
}

void validate(const CouplingGraph& g) {
  if (g.n < 1 || g.n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be between 1 and " +
                                std::to_string(kMaxQubits));
  }
  if (g.j.rows() != g.n || g.j.cols() != g.n) {
    throw std::invalid_argument("coupling matrix must be " +
                                std::to_string(g.n) + "x" +
                                std::to_string(g.n));
  }
  if (!g.j.allFinite()) {
    throw std::invalid_argument("coupling matrix entries must be finite");
  }
  for (int a = 0; a < g.n; ++a) {
    if (g.j(a, a) != 0.0) {
      throw std::invalid_argument("coupling matrix diagonal must be zero (qubit " +
                                  std::to_string(a + 1) + ")");
    }
    for (int b = a + 1; b < g.n; ++b) {
      if (g.j(a, b) != g.j(b, a)) {
        std::ostringstream msg;
        msg << "coupling matrix asymmetric between qubits " << (a + 1)
            << " and " << (b + 1) << ": J(" << (a + 1) << "," << (b + 1)
            << ")=" << g.j(a, b) << " vs J(" << (b + 1) << "," << (a + 1)
            << ")=" << g.j(b, a);
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

std::string to_string(Phase p) {
  switch (p) {
    case Phase::PTSymmetric: return "pt_symmetric";
    case Phase::ExceptionalPoint: return "exceptional_point";
    case Phase::PTBroken: return "pt_broken";
  }
  return "unknown";
}

Matrix build_hamiltonian(const std::vector<QubitParams>& qubits,
                         const CouplingGraph& coupling) {
  const int n = static_cast<int>(qubits.size());
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be between 1 and " +
                                std::to_string(kMaxQubits));
  }
  validate(coupling);
  if (coupling.n != n) {
    throw std::invalid_argument(
        "coupling graph is over " + std::to_string(coupling.n) +
        " qubits but " + std::to_string(n) + " parameter sets were given");
  }
  for (const auto& q : qubits) validate(q);

  const int dim = 1 << n;
  Matrix h = Matrix::Zero(dim, dim);

  for (int q = 1; q <= n; ++q) {
    const int mask = 1 << qubit_bit(n, q);
    const cxd site(qubits[q - 1].delta, -0.5 * qubits[q - 1].gamma);
    const double drive = qubits[q - 1].omega;
    for (int s = 0; s < dim; ++s) {
      if ((s & mask) == 0) h(s, s) += site;  // |e><e| projector
      if (drive != 0.0) h(s ^ mask, s) += drive;  // sigma^x flip
    }
  }

  // Excitation hopping |ef><fe| + |fe><ef| with amplitude J_ab per pair.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const double g = coupling.j(a - 1, b - 1);
      if (g == 0.0) continue;
      const int ma = 1 << qubit_bit(n, a);
      const int mb = 1 << qubit_bit(n, b);
      for (int s = 0; s < dim; ++s) {
        const bool ea = (s & ma) == 0;
        const bool eb = (s & mb) == 0;
        if (ea != eb) h(s ^ ma ^ mb, s) += g;
      }
    }
  }
  return h;
}

PhaseClassification classify_phase(const QubitParams& q, double tol) {
  validate(q);
  if (q.delta != 0.0) {
    throw std::invalid_argument(
        "phase classification is defined on the delta = 0 line only");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double boundary = 0.25 * q.gamma;
  const double scale = std::max({q.omega, boundary, 1e-300});
  if (std::abs(q.omega - boundary) <= tol * scale) {
    return {Phase::ExceptionalPoint, nan};
  }
  if (q.omega > boundary) {
    return {Phase::PTSymmetric, evolution_period(q)};
  }
  return {Phase::PTBroken, nan};
}

double evolution_period(const QubitParams& q) {
  validate(q);
  const double disc = 16.0 * q.omega * q.omega - q.gamma * q.gamma;
  if (!(disc > 0.0)) {
    throw std::invalid_argument(
        "period undefined: requires the PT-symmetric phase (16 omega^2 > gamma^2)");
  }
  return 4.0 * kPi / std::sqrt(disc);
}

}  // namespace nhqsim
