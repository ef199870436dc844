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

#include "oracles.hpp"

#include <cmath>

namespace oracles {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix embed(int n, int q, const Matrix& op) {
  Matrix out = Matrix::Identity(1, 1);
  for (int k = 1; k <= n; ++k) {
    out = kron(out, k == q ? op : Matrix::Identity(2, 2));
  }
  return out;
}

Matrix kron_hamiltonian(const std::vector<QubitParams>& qubits,
                        const RealMatrix& j) {
  const int n = static_cast<int>(qubits.size());
  Matrix excited = Matrix::Zero(2, 2);
  excited(0, 0) = 1.0;  // |e><e| in the (e, f) ordering
  Matrix flip = Matrix::Zero(2, 2);
  flip(0, 1) = 1.0;
  flip(1, 0) = 1.0;
  Matrix lower = Matrix::Zero(2, 2);  // |e><f|
  lower(0, 1) = 1.0;
  Matrix raise = Matrix::Zero(2, 2);  // |f><e|
  raise(1, 0) = 1.0;

  const int dim = 1 << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (int q = 1; q <= n; ++q) {
    const auto& p = qubits[q - 1];
    h += cxd(p.delta, -0.5 * p.gamma) * embed(n, q, excited);
    h += p.omega * embed(n, q, flip);
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      h += j(a - 1, b - 1) * (embed(n, a, raise) * embed(n, b, lower) +
                              embed(n, a, lower) * embed(n, b, raise));
    }
  }
  return h;
}

namespace {

Vector taylor_run(const Matrix& h, const Vector& psi0, double t_us, int steps) {
  const Matrix m = cxd(0.0, -1.0) * (t_us / steps) * h;
  Vector v = psi0;
  for (int s = 0; s < steps; ++s) {
    Vector acc = v;
    Vector term = v;
    for (int k = 1; k <= 24; ++k) {
      term = (m * term) / static_cast<double>(k);
      acc += term;
    }
    v = acc;
  }
  return v;
}

}  // namespace

Vector taylor_propagate(const Matrix& h, const Vector& psi0, double t_us,
                        double tol) {
  if (t_us == 0.0) return psi0;
  const double scale = h.cwiseAbs().rowwise().sum().maxCoeff();
  int steps = std::max(1, static_cast<int>(std::ceil(t_us * scale / 0.5)));
  Vector prev = taylor_run(h, psi0, t_us, steps);
  for (int attempt = 0; attempt < 8; ++attempt) {
    steps *= 2;
    Vector next = taylor_run(h, psi0, t_us, steps);
    if ((next - prev).norm() <= tol * std::max(1.0, next.norm())) return next;
    prev = next;
  }
  return prev;
}

Vector unitary_propagate(const Matrix& h, const Vector& psi0, double t_us) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector phases(h.rows());
  for (int i = 0; i < h.rows(); ++i) {
    phases(i) = std::exp(cxd(0.0, -es.eigenvalues()(i) * t_us));
  }
  return es.eigenvectors() *
         (phases.asDiagonal() * (es.eigenvectors().adjoint() * psi0));
}

namespace {

Matrix hermitian_sqrt(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Vector roots(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    roots(i) = std::sqrt(std::max(0.0, es.eigenvalues()(i)));
  }
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double concurrence_literal(const Matrix& rho) {
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix rho_tilde = yy * rho.conjugate() * yy;
  const Matrix root = hermitian_sqrt(rho);
  const Matrix inner = root * rho_tilde * root;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_sqrt(inner));
  std::vector<double> lam(es.eigenvalues().data(),
                          es.eigenvalues().data() + 4);
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

Matrix partial_trace_outer(const StateVector& psi,
                           const std::vector<int>& keep) {
  const int n = psi.n;
  const Matrix outer = psi.amps * psi.amps.adjoint();
  std::vector<int> keep_sorted(keep);
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<int> rest;
  for (int q = 1; q <= n; ++q) {
    bool kept = false;
    for (int k : keep_sorted) kept = kept || k == q;
    if (!kept) rest.push_back(q);
  }
  const int m = static_cast<int>(keep_sorted.size());
  const int mc = n - m;
  auto compose = [&](int kept_idx, int rest_idx) {
    int s = 0;
    for (int i = 0; i < m; ++i) {
      if ((kept_idx >> (m - 1 - i)) & 1) {
        s |= 1 << nhqsim::qubit_bit(n, keep_sorted[i]);
      }
    }
    for (int i = 0; i < mc; ++i) {
      if ((rest_idx >> (mc - 1 - i)) & 1) {
        s |= 1 << nhqsim::qubit_bit(n, rest[i]);
      }
    }
    return s;
  };
  Matrix rho = Matrix::Zero(1 << m, 1 << m);
  for (int a = 0; a < (1 << m); ++a) {
    for (int b = 0; b < (1 << m); ++b) {
      for (int c = 0; c < (1 << mc); ++c) {
        rho(a, b) += outer(compose(a, c), compose(b, c));
      }
    }
  }
  return rho;
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

int Rng::integer(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen);
}

cxd Rng::gaussian() {
  std::normal_distribution<double> d(0.0, 1.0);
  return {d(gen), d(gen)};
}

std::vector<QubitParams> random_qubits(Rng& rng, int n, bool passive,
                                       bool hermitian) {
  std::vector<QubitParams> out;
  for (int q = 0; q < n; ++q) {
    QubitParams p;
    p.delta = passive ? 0.0 : rng.uniform(-0.1, 0.1);
    p.gamma = hermitian ? 0.0 : rng.uniform(passive ? 0.5 : 0.0, 6.0);
    p.omega = rng.uniform(0.0, 6.0);
    out.push_back(p);
  }
  return out;
}

CouplingGraph random_coupling(Rng& rng, int n) {
  RealMatrix j = RealMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      j(a, b) = j(b, a) = rng.uniform(0.0, 0.1);
    }
  }
  return CouplingGraph::custom(std::move(j));
}

StateVector random_pure_state(Rng& rng, int n) {
  Vector a(1 << n);
  for (int i = 0; i < a.size(); ++i) a(i) = rng.gaussian();
  a /= a.norm();
  return {n, std::move(a), true};
}

Matrix random_mixed_two_qubit(Rng& rng) {
  Matrix g(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = rng.gaussian();
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

Matrix random_single_qubit_unitary(Rng& rng) {
  Matrix g(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = rng.gaussian();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const cxd d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

}  // namespace oracles
