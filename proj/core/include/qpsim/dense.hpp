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

#ifndef QPSIM_DENSE_HPP
#define QPSIM_DENSE_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "qpsim/gates.hpp"
#include "qpsim/pauli.hpp"

namespace qpsim {

/// Brute-force density-matrix simulator, deliberately naive. It is the
/// independent oracle the rest of the library is tested against, so it favors
/// the most literal implementation of every operation over speed.
/// Capped at 10 qubits (a 1024 x 1024 complex matrix).
class DenseState {
 public:
  using Matrix = Eigen::MatrixXcd;

  static DenseState zero_state(int n);
  static DenseState from_ket(std::span<const std::complex<double>> amplitudes);
  static DenseState from_density(Matrix rho);
  static DenseState from_pauli_vector(const PauliVector& v);
  static DenseState product_state(std::span<const SingleQubitState> states);

  int num_qubits() const { return n_; }
  const Matrix& rho() const { return rho_; }

  void apply_gate(Gate g, std::span<const int> qubits, double theta = 0.0);
  /// Applies a 2x2 or 4x4 unitary; for two qubits, qubits[0] is the most
  /// significant bit of the local index.
  void apply_unitary(const Matrix& u, std::span<const int> qubits);
  /// rho <- sum_k p_k P_k rho P_k for a stochastic Pauli channel given as
  /// (probability, Pauli) terms on the full register.
  void apply_mixture(std::span<const std::pair<double, PauliString>> terms);

  /// Projects `qubit` onto |0> and renormalizes; returns the Born
  /// probability. The state is unchanged when the probability is 0.
  double postselect_zero(int qubit);

  double expectation(const PauliString& a) const;
  double trace() const { return rho_.trace().real(); }
  double min_eigenvalue() const;

  DenseState tensor(const DenseState& rhs) const;
  /// Traces out every qubit not in `keep` (which must be ascending).
  DenseState partial_trace_keep(std::span<const int> keep) const;

  PauliVector pauli_vector() const;

 private:
  DenseState(int n, Matrix rho) : n_(n), rho_(std::move(rho)) {}
  int n_ = 0;
  Matrix rho_;
};

/// Full 2^n x 2^n unitary of a gate embedded at `qubits`.
Eigen::MatrixXcd embed_unitary(int n, const Eigen::MatrixXcd& u, std::span<const int> qubits);

Eigen::MatrixXcd gate_matrix_eigen(Gate g, double theta = 0.0);

}  // namespace qpsim

#endif  // QPSIM_DENSE_HPP
