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

#include "nhqsim/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>

namespace nhqsim {

namespace {

void require_normalized(const StateVector& psi) {
  validate(psi);
  if (std::abs(psi.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("operation requires a normalized state");
  }
}

// sigma_y (x) sigma_y in the pair basis |ee>, |ef>, |fe>, |ff|.
const Matrix& spin_flip_kernel() {
  static const Matrix yy = [] {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return yy;
}

}  // namespace

Matrix partial_trace(const StateVector& psi, const std::vector<int>& keep) {
  require_normalized(psi);
  const int n = psi.n;
  std::set<int> kept(keep.begin(), keep.end());
  if (kept.empty() || static_cast<int>(kept.size()) >= n) {
    throw std::invalid_argument(
        "kept qubit set must be a non-empty strict subset");
  }
  for (int q : kept) {
    if (q < 1 || q > n) {
      throw std::invalid_argument("kept qubit index out of range");
    }
  }

  std::vector<int> keep_bits, rest_bits;
  for (int q = 1; q <= n; ++q) {
    ((kept.count(q) != 0) ? keep_bits : rest_bits).push_back(qubit_bit(n, q));
  }
  const int m = static_cast<int>(keep_bits.size());
  const int mc = n - m;

  auto compose = [&](int kept_idx, int rest_idx) {
    int s = 0;
    for (int i = 0; i < m; ++i) {
      if ((kept_idx >> (m - 1 - i)) & 1) s |= 1 << keep_bits[i];
    }
    for (int i = 0; i < mc; ++i) {
      if ((rest_idx >> (mc - 1 - i)) & 1) s |= 1 << rest_bits[i];
    }
    return s;
  };

  Matrix rho = Matrix::Zero(1 << m, 1 << m);
  for (int a = 0; a < (1 << m); ++a) {
    for (int b = 0; b < (1 << m); ++b) {
      cxd sum = 0.0;
      for (int c = 0; c < (1 << mc); ++c) {
        sum += psi.amps(compose(a, c)) * std::conj(psi.amps(compose(b, c)));
      }
      rho(a, b) = sum;
    }
  }
  return rho;
}

Matrix pair_density(const StateVector& psi, int a, int b) {
  if (a == b || a < 1 || b < 1 || a > psi.n || b > psi.n) {
    throw std::invalid_argument("invalid qubit pair");
  }
  if (psi.n == 2) {
    require_normalized(psi);
    return psi.amps * psi.amps.adjoint();
  }
  return partial_trace(psi, {a, b});
}

double concurrence(const Matrix& rho_2q) {
  if (rho_2q.rows() != 4 || rho_2q.cols() != 4) {
    throw std::invalid_argument("concurrence needs a 4x4 two-qubit state");
  }
  if ((rho_2q - rho_2q.adjoint()).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho_2q.trace() - cxd(1.0)) > 1e-8) {
    throw std::invalid_argument("density matrix trace must be one");
  }

  const Matrix& yy = spin_flip_kernel();
  const Matrix rho_tilde = yy * rho_2q.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix> es(rho_2q * rho_tilde, false);
  if (es.info() != Eigen::Success) {
    throw numerical_error("eigensolver failed in concurrence");
  }
  // Eigenvalues of rho * rho~ are non-negative up to roundoff. Values below
  // the roundoff floor are exact zeros of rank-deficient states; clamping
  // them keeps the square root from amplifying eps-level noise to 1e-8.
  double scale = 0.0;
  for (int i = 0; i < 4; ++i) {
    scale = std::max(scale, es.eigenvalues()(i).real());
  }
  const double floor =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1e-30);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) {
    const double value = es.eigenvalues()(i).real();
    lam[i] = value <= floor ? 0.0 : std::sqrt(value);
  }
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double three_tangle(const StateVector& psi) {
  if (psi.n != 3) {
    throw std::invalid_argument("three-tangle is defined for three qubits");
  }
  require_normalized(psi);
  const auto& a = psi.amps;
  // 1-based amplitude pairs over the basis |eee>..|fff>.
  auto p = [&](int j, int k) { return a(j - 1) * a(k - 1); };
  const cxd d1 = p(1, 8) * p(1, 8) + p(2, 7) * p(2, 7) + p(3, 6) * p(3, 6) +
                 p(4, 5) * p(4, 5);
  const cxd d2 = p(1, 8) * (p(4, 5) + p(3, 6) + p(2, 7)) +
                 p(3, 6) * p(4, 5) + p(4, 5) * p(2, 7) + p(2, 7) * p(3, 6);
  const cxd d3 = a(0) * a(6) * a(3) * a(5) + a(1) * a(7) * a(2) * a(4);
  const double tau = 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
  return std::clamp(tau, 0.0, 1.0 + 1e-9);
}

double entropy(const Matrix& rho_1q) {
  if (rho_1q.rows() != 2 || rho_1q.cols() != 2) {
    throw std::invalid_argument("entropy needs a 2x2 single-qubit state");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_1q);
  if (es.info() != Eigen::Success) {
    throw numerical_error("eigensolver failed in entropy");
  }
  double s = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double pr = std::clamp(es.eigenvalues()(i), 0.0, 1.0);
    if (pr > 0.0) s -= pr * std::log(pr);
  }
  return s;
}

std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::GhzLike: return "ghz_like";
    case StateClass::WLike: return "w_like";
    case StateClass::Biseparable: return "biseparable";
    case StateClass::Separable: return "separable";
    case StateClass::Unclassified: return "unclassified";
  }
  return "unknown";
}

double EntanglementReport::max_concurrence() const {
  return std::max({c12, c13, c23});
}

double EntanglementReport::min_entropy() const { return std::min({s1, s2, s3}); }

double EntanglementReport::mean_entropy() const { return (s1 + s2 + s3) / 3.0; }

namespace {

StateClass classify(const EntanglementReport& r,
                    const ClassificationThresholds& thr) {
  const double w_entropy = std::log(3.0) - (2.0 / 3.0) * std::log(2.0);
  const double w_concurrence = 2.0 / 3.0;
  const std::array<double, 3> s{r.s1, r.s2, r.s3};
  const std::array<double, 3> c{r.c12, r.c13, r.c23};

  if (r.tau > thr.ghz_tau && r.max_concurrence() < thr.ghz_max_concurrence) {
    return StateClass::GhzLike;
  }

  bool w_signature = r.tau < thr.w_tau && r.min_entropy() > thr.w_min_entropy;
  for (double sj : s) {
    w_signature = w_signature && std::abs(sj - w_entropy) < thr.w_signature_window;
  }
  for (double cj : c) {
    w_signature =
        w_signature && std::abs(cj - w_concurrence) < thr.w_signature_window;
  }
  if (w_signature) return StateClass::WLike;

  int low = 0, high = 0;
  for (double sj : s) {
    if (sj < thr.separable_entropy) ++low;
    if (sj > thr.biseparable_entropy) ++high;
  }
  if (low == 3) return StateClass::Separable;
  if (low == 1 && high == 2) return StateClass::Biseparable;
  return StateClass::Unclassified;
}

}  // namespace

EntanglementReport report(const StateVector& psi, double t_us,
                          const ClassificationThresholds& thresholds) {
  if (psi.n != 3) {
    throw std::invalid_argument("report is defined for three qubits");
  }
  EntanglementReport r;
  r.t_us = t_us;
  r.c12 = concurrence(partial_trace(psi, {1, 2}));
  r.c13 = concurrence(partial_trace(psi, {1, 3}));
  r.c23 = concurrence(partial_trace(psi, {2, 3}));
  r.tau = three_tangle(psi);
  r.s1 = entropy(partial_trace(psi, {1}));
  r.s2 = entropy(partial_trace(psi, {2}));
  r.s3 = entropy(partial_trace(psi, {3}));
  r.cls = classify(r, thresholds);
  return r;
}

}  // namespace nhqsim
