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

#include "nhqsim/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace nhqsim {

namespace {

void check_dimensions(const Matrix& h, const StateVector& psi) {
  validate(psi);
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("Hamiltonian must be square");
  }
  if (h.rows() != psi.amps.size()) {
    throw std::invalid_argument("Hamiltonian and state dimensions differ");
  }
  if (!h.allFinite()) {
    throw std::invalid_argument("Hamiltonian entries must be finite");
  }
}

Matrix step_operator(const Matrix& h, double t_us) {
  return (cxd(0.0, -1.0) * t_us * h).exp();
}

double cond2(const Matrix& m) {
  if (!m.allFinite()) return std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

}  // namespace

StateVector propagate(const Matrix& h, const StateVector& psi0, double t_us) {
  check_dimensions(h, psi0);
  if (!(t_us >= 0.0)) {
    throw std::invalid_argument("propagation time must be non-negative");
  }
  if (t_us == 0.0) return psi0;
  return {psi0.n, step_operator(h, t_us) * psi0.amps, false};
}

StateVector normalize(const StateVector& psi, double norm_floor) {
  if (psi.n < 1 || psi.n > kMaxQubits || psi.amps.size() != psi.dim()) {
    throw std::invalid_argument("state has inconsistent dimensions");
  }
  const double nrm = psi.amps.norm();
  if (!std::isfinite(nrm) || nrm <= norm_floor) {
    throw numerical_error("post-selection probability vanished (norm " +
                          std::to_string(nrm) + " below floor)");
  }
  return {psi.n, psi.amps / nrm, true};
}

SpectralDecomposition decompose(const Matrix& h, const StateVector& psi0) {
  check_dimensions(h, psi0);
  const int dim = static_cast<int>(h.rows());

  Eigen::ComplexEigenSolver<Matrix> rs(h, true);
  if (rs.info() != Eigen::Success) {
    throw numerical_error("eigensolver failed on the Hamiltonian");
  }
  Eigen::ComplexEigenSolver<Matrix> ls(h.transpose(), true);
  if (ls.info() != Eigen::Success) {
    throw numerical_error("eigensolver failed on the transposed Hamiltonian");
  }

  // Canonical eigenvalue order keeps outputs deterministic.
  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const cxd ea = rs.eigenvalues()(a), eb = rs.eigenvalues()(b);
    if (ea.real() != eb.real()) return ea.real() < eb.real();
    return ea.imag() < eb.imag();
  });

  SpectralDecomposition d;
  d.eigenvalues = Vector(dim);
  d.right = Matrix(dim, dim);
  d.left = Matrix(dim, dim);
  for (int i = 0; i < dim; ++i) {
    d.eigenvalues(i) = rs.eigenvalues()(order[i]);
    d.right.col(i) = rs.eigenvectors().col(order[i]).normalized();
  }

  // Pair left eigenvectors (rows of the transpose problem) to the right ones
  // greedily by eigenvalue distance.
  std::vector<char> used(dim, 0);
  d.pairing_distance = 0.0;
  for (int i = 0; i < dim; ++i) {
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < dim; ++j) {
      if (used[j]) continue;
      const double dist = std::abs(ls.eigenvalues()(j) - d.eigenvalues(i));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    used[best] = 1;
    d.pairing_distance = std::max(d.pairing_distance, best_dist);
    d.left.row(i) = ls.eigenvectors().col(best).transpose();
  }

  // Biorthogonalize: blockwise within eigenvalue clusters, plain rescaling
  // for simple eigenvalues, so that left_j . right_k = delta_jk.
  double max_abs_e = 0.0;
  for (int i = 0; i < dim; ++i) {
    max_abs_e = std::max(max_abs_e, std::abs(d.eigenvalues(i)));
  }
  const double cluster_tol = 1e-8 * std::max(max_abs_e, 1e-30);
  int i = 0;
  while (i < dim) {
    int end = i + 1;
    while (end < dim &&
           std::abs(d.eigenvalues(end) - d.eigenvalues(end - 1)) <= cluster_tol) {
      ++end;
    }
    const int m = end - i;
    if (m == 1) {
      const cxd ov = (d.left.row(i) * d.right.col(i))(0, 0);
      if (std::abs(ov) > 1e-300) d.left.row(i) /= ov;
    } else {
      const Matrix overlap = d.left.middleRows(i, m) * d.right.middleCols(i, m);
      Eigen::PartialPivLU<Matrix> lu(overlap);
      const Matrix fixed = lu.solve(d.left.middleRows(i, m));
      if (fixed.allFinite()) d.left.middleRows(i, m) = fixed;
    }
    i = end;
  }

  d.condition_number = cond2(d.right) * cond2(d.left);
  d.usable = std::isfinite(d.condition_number) &&
             d.condition_number <= kUnusableCondition;
  d.overlaps = d.left * psi0.amps;
  return d;
}

Trajectory trajectory(const Matrix& h, const StateVector& psi0,
                      const std::vector<double>& t_grid_us,
                      double norm_floor) {
  check_dimensions(h, psi0);
  if (t_grid_us.empty()) {
    throw std::invalid_argument("time grid must be non-empty");
  }
  if (!(t_grid_us.front() >= 0.0)) {
    throw std::invalid_argument("time grid must start at t >= 0");
  }
  for (size_t k = 1; k < t_grid_us.size(); ++k) {
    if (!(t_grid_us[k] > t_grid_us[k - 1])) {
      throw std::invalid_argument("time grid must be strictly increasing");
    }
  }

  Trajectory out;
  out.times_us.reserve(t_grid_us.size());
  out.states.reserve(t_grid_us.size());
  out.raw_norms.reserve(t_grid_us.size());

  double cumulative = psi0.amps.norm();
  if (!(cumulative > norm_floor)) {
    throw numerical_error("initial state norm below the post-selection floor");
  }
  Vector z = psi0.amps / cumulative;

  double cached_dt = -1.0;
  Matrix u;
  double prev_t = 0.0;
  for (double t : t_grid_us) {
    const double dt = t - prev_t;
    if (dt > 0.0) {
      if (dt != cached_dt) {
        u = step_operator(h, dt);
        cached_dt = dt;
      }
      z = u * z;
      const double r = z.norm();
      cumulative *= r;
      if (!std::isfinite(r) || r <= norm_floor) {
        out.terminated = true;
        break;
      }
      z /= r;
    }
    out.times_us.push_back(t);
    out.states.push_back({psi0.n, z, true});
    out.raw_norms.push_back(cumulative);
    prev_t = t;
  }
  return out;
}

}  // namespace nhqsim
