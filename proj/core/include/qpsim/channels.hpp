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

#ifndef QPSIM_CHANNELS_HPP
#define QPSIM_CHANNELS_HPP

#include <Eigen/Dense>
#include <vector>

#include "qpsim/gates.hpp"
#include "qpsim/pauli.hpp"

namespace qpsim {

/// Stochastic Pauli channel: rho -> sum_k p_k P_k rho P_k.
struct PauliChannel {
  int n = 0;
  std::vector<std::pair<double, PauliString>> terms;

  /// Depolarizing with the rate convention where each of X, Y, Z occurs with
  /// probability p/4 (so rho -> (1-p) rho + p I/2).
  static PauliChannel depolarizing1(double p);
  /// Two-qubit depolarizing: each of the 15 nonidentity Paulis at p/16.
  static PauliChannel depolarizing2(double p);
  /// (1-p)[I] + p[Z].
  static PauliChannel dephasing(double p);
  /// (1 - (px+py+pz)/4)[I] + sum_P (p_P / 4)[P].
  static PauliChannel pauli_rates(double px, double py, double pz);

  void validate() const;
};

/// Pauli transfer matrix: R[i][j] = 2^-n Tr[P_i Lambda(P_j)]. Composition is
/// the matrix product in application order, Cliffords are signed
/// permutations, and the channel stabilizer norm of the adjoint is the
/// largest row L1 norm.
class Ptm {
 public:
  Ptm() = default;
  Ptm(int n, Eigen::MatrixXd matrix);

  static Ptm identity(int n);
  static Ptm of_gate(Gate g, double theta = 0.0);
  static Ptm of_pauli_channel(const PauliChannel& channel);
  static Ptm dephasing(double p);
  static Ptm depo1(double p);
  static Ptm depo2(double p);
  static Ptm pauli_noise(double px, double py, double pz);

  int num_qubits() const { return n_; }
  const Eigen::MatrixXd& matrix() const { return m_; }

  /// PTM of "apply rhs first, then this".
  Ptm after(const Ptm& rhs) const;
  Ptm tensor(const Ptm& rhs) const;
  PauliVector apply(const PauliVector& v) const;

  double row_l1(int row) const { return m_.row(row).cwiseAbs().sum(); }
  bool is_diagonal(double tol = 1e-12) const;
  bool is_signed_permutation(double tol = 1e-12) const;

 private:
  int n_ = 0;
  Eigen::MatrixXd m_;
};

/// D(A) = 2^-n sum_sigma |Tr(A sigma)|, the stabilizer norm of an operator.
double stabilizer_norm(const PauliVector& a);

/// D(Lambda^dagger) = max row L1 norm of the PTM.
double channel_stabilizer_norm(const Ptm& r);

struct UnitCellNorms {
  double d2 = 0.0;
  double d3 = 0.0;
};

/// Channel stabilizer norms of the two T-bearing unit cells, computed from
/// the explicit 16x16 PTM products.
UnitCellNorms unit_cell_norms(double p1, double p2);

/// Closed forms: d2 = max(1, sqrt(2)(p1-1)(p2-1)),
/// d3 = max(1, sqrt(2)(p1-1)(p2-1), -2(p1-1)^2(p2-1)).
UnitCellNorms unit_cell_norms_closed_form(double p1, double p2);

/// The 16x16 PTM of unit cell 2 or 3 (kind = 2 or 3).
Ptm unit_cell_ptm(int kind, double p1, double p2);

/// D(Lambda_Pauli after T) = max{1, sqrt(2)(1-(px+pz)/2), sqrt(2)(1-(py+pz)/2)}.
double pauli_channel_t_norm(double px, double py, double pz);

}  // namespace qpsim

#endif  // QPSIM_CHANNELS_HPP
