// Copyright 2026 The qpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpsim/dense.hpp"

#include <bit>
#include <stdexcept>

namespace qpsim {

namespace {

constexpr int kMaxDenseQubits = 10;

void check_dense_qubits(int n) {
  if (n < 0 || n > kMaxDenseQubits) {
    throw std::invalid_argument("dense oracle supports at most 10 qubits");
  }
}

}  // namespace

DenseState DenseState::zero_state(int n) {
  check_dense_qubits(n);
  size_t dim = size_t{1} << n;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return DenseState(n, std::move(rho));
}

DenseState DenseState::from_ket(std::span<const std::complex<double>> amplitudes) {
  size_t dim = amplitudes.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("amplitude vector length must be a power of two");
  }
  int n = std::countr_zero(dim);
  check_dense_qubits(n);
  Eigen::VectorXcd psi(dim);
  for (size_t i = 0; i < dim; ++i) psi(i) = amplitudes[i];
  double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("amplitude vector is not normalized");
  }
  Matrix rho = psi * psi.adjoint();
  return DenseState(n, std::move(rho));
}

DenseState DenseState::from_density(Matrix rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0 ||
      (rho.rows() & (rho.rows() - 1)) != 0) {
    throw std::invalid_argument("density matrix must be square with 2^n rows");
  }
  int n = std::countr_zero(static_cast<size_t>(rho.rows()));
  check_dense_qubits(n);
  if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-12) {
    throw std::invalid_argument("density matrix trace must be 1");
  }
  return DenseState(n, std::move(rho));
}

DenseState DenseState::from_pauli_vector(const PauliVector& v) {
  int n = v.num_qubits();
  check_dense_qubits(n);
  std::vector<std::complex<double>> flat = v.to_density();
  size_t dim = size_t{1} << n;
  Matrix rho(dim, dim);
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) rho(r, c) = flat[r * dim + c];
  return from_density(std::move(rho));
}

DenseState DenseState::product_state(std::span<const SingleQubitState> states) {
  check_dense_qubits(static_cast<int>(states.size()));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Ones(1);
  for (SingleQubitState s : states) {
    auto ket = single_state_ket(s);
    Eigen::VectorXcd q(2);
    q << ket[0], ket[1];
    Eigen::VectorXcd next(psi.size() * 2);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      next(2 * i) = psi(i) * q(0);
      next(2 * i + 1) = psi(i) * q(1);
    }
    psi = std::move(next);
  }
  // The loop above appends each new qubit as the least significant bit, which
  // matches qubit 0 = most significant.
  return from_ket(std::span<const std::complex<double>>(psi.data(), static_cast<size_t>(psi.size())));
}

Eigen::MatrixXcd gate_matrix_eigen(Gate g, double theta) {
  std::vector<std::complex<double>> m = gate_matrix(g, theta);
  size_t dim = m.size() == 4 ? 2 : 4;
  Eigen::MatrixXcd out(dim, dim);
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) out(r, c) = m[r * dim + c];
  return out;
}

Eigen::MatrixXcd embed_unitary(int n, const Eigen::MatrixXcd& u, std::span<const int> qubits) {
  size_t dim = size_t{1} << n;
  size_t local_dim = size_t{1} << qubits.size();
  if (static_cast<size_t>(u.rows()) != local_dim || static_cast<size_t>(u.cols()) != local_dim) {
    throw std::invalid_argument("unitary dimension does not match qubit count");
  }
  for (size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n) throw std::invalid_argument("qubit index out of range");
    for (size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) throw std::invalid_argument("repeated qubit index");
    }
  }
  auto local_index = [&](size_t full) {
    size_t l = 0;
    for (size_t k = 0; k < qubits.size(); ++k) {
      size_t bit = size_t{1} << (n - 1 - qubits[k]);
      // qubits[0] is the most significant local bit.
      if (full & bit) l |= local_dim >> (k + 1);
    }
    return l;
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (size_t c = 0; c < dim; ++c) {
    size_t lc = local_index(c);
    size_t base = c;
    for (size_t k = 0; k < qubits.size(); ++k) {
      base &= ~(size_t{1} << (n - 1 - qubits[k]));
    }
    for (size_t lr = 0; lr < local_dim; ++lr) {
      if (u(lr, lc) == std::complex<double>(0.0)) continue;
      size_t r = base;
      for (size_t k = 0; k < qubits.size(); ++k) {
        if (lr & (local_dim >> (k + 1))) r |= size_t{1} << (n - 1 - qubits[k]);
      }
      out(r, c) = u(lr, lc);
    }
  }
  return out;
}

void DenseState::apply_gate(Gate g, std::span<const int> qubits, double theta) {
  apply_unitary(gate_matrix_eigen(g, theta), qubits);
}

void DenseState::apply_unitary(const Matrix& u, std::span<const int> qubits) {
  Matrix full = embed_unitary(n_, u, qubits);
  rho_ = full * rho_ * full.adjoint();
}

void DenseState::apply_mixture(std::span<const std::pair<double, PauliString>> terms) {
  Matrix out = Matrix::Zero(rho_.rows(), rho_.cols());
  double total = 0.0;
  for (const auto& [prob, pauli] : terms) {
    if (prob < -1e-12 || prob > 1.0 + 1e-12) throw std::invalid_argument("bad probability");
    if (pauli.num_qubits() != n_) throw std::invalid_argument("Pauli width mismatch");
    total += prob;
    if (prob == 0.0) continue;
    std::vector<std::complex<double>> pm = pauli_dense_matrix(pauli);
    Matrix p(rho_.rows(), rho_.cols());
    for (Eigen::Index r = 0; r < rho_.rows(); ++r)
      for (Eigen::Index c = 0; c < rho_.cols(); ++c) p(r, c) = pm[r * rho_.cols() + c];
    out += prob * (p * rho_ * p.adjoint());
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("mixture probabilities must sum to 1");
  }
  rho_ = std::move(out);
}

double DenseState::postselect_zero(int qubit) {
  if (qubit < 0 || qubit >= n_) throw std::invalid_argument("qubit index out of range");
  size_t dim = size_t{1} << n_;
  size_t bit = size_t{1} << (n_ - 1 - qubit);
  Matrix projected = Matrix::Zero(dim, dim);
  for (size_t r = 0; r < dim; ++r) {
    if (r & bit) continue;
    for (size_t c = 0; c < dim; ++c) {
      if (c & bit) continue;
      projected(r, c) = rho_(r, c);
    }
  }
  double prob = projected.trace().real();
  if (prob <= 1e-15) return 0.0;
  rho_ = projected / prob;
  return prob;
}

double DenseState::expectation(const PauliString& a) const {
  if (a.num_qubits() != n_) throw std::invalid_argument("Pauli size mismatch");
  std::vector<std::complex<double>> pm = pauli_dense_matrix(a);
  size_t dim = size_t{1} << n_;
  std::complex<double> sum = 0.0;
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) sum += rho_(r, c) * pm[c * dim + r];
  return sum.real();
}

double DenseState::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver((rho_ + rho_.adjoint()) / 2.0);
  return solver.eigenvalues().minCoeff();
}

DenseState DenseState::tensor(const DenseState& rhs) const {
  int n = n_ + rhs.n_;
  check_dense_qubits(n);
  size_t da = size_t{1} << n_, db = size_t{1} << rhs.n_;
  Matrix out(da * db, da * db);
  for (size_t ra = 0; ra < da; ++ra)
    for (size_t rb = 0; rb < db; ++rb)
      for (size_t ca = 0; ca < da; ++ca)
        for (size_t cb = 0; cb < db; ++cb)
          out(ra * db + rb, ca * db + cb) = rho_(ra, ca) * rhs.rho_(rb, cb);
  return DenseState(n, std::move(out));
}

DenseState DenseState::partial_trace_keep(std::span<const int> keep) const {
  int nk = static_cast<int>(keep.size());
  for (int i = 0; i + 1 < nk; ++i) {
    if (keep[i] >= keep[i + 1]) throw std::invalid_argument("keep set must be ascending");
  }
  size_t dim_keep = size_t{1} << nk;
  std::vector<int> traced;
  for (int q = 0; q < n_; ++q) {
    bool kept = false;
    for (int k : keep) kept |= (k == q);
    if (!kept) traced.push_back(q);
  }
  size_t dim_tr = size_t{1} << traced.size();
  auto full_index = [&](size_t kbits, size_t tbits) {
    size_t idx = 0;
    for (int i = 0; i < nk; ++i) {
      if (kbits & (dim_keep >> (i + 1))) idx |= size_t{1} << (n_ - 1 - keep[i]);
    }
    for (size_t i = 0; i < traced.size(); ++i) {
      if (tbits & (dim_tr >> (i + 1))) idx |= size_t{1} << (n_ - 1 - traced[i]);
    }
    return idx;
  };
  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (size_t r = 0; r < dim_keep; ++r)
    for (size_t c = 0; c < dim_keep; ++c)
      for (size_t t = 0; t < dim_tr; ++t)
        out(r, c) += rho_(full_index(r, t), full_index(c, t));
  return DenseState(nk, std::move(out));
}

PauliVector DenseState::pauli_vector() const {
  size_t dim = size_t{1} << n_;
  std::vector<std::complex<double>> flat(dim * dim);
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) flat[r * dim + c] = rho_(r, c);
  return PauliVector::of_density(flat, n_);
}

}  // namespace qpsim
