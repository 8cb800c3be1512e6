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

#ifndef QPSIM_TABLEAU_HPP
#define QPSIM_TABLEAU_HPP

#include <span>
#include <vector>

#include "qpsim/gates.hpp"
#include "qpsim/pauli.hpp"

namespace qpsim {

/// One Clifford gate applied to specific qubits.
struct CliffordOp {
  Gate gate;
  std::vector<int> qubits;
};

/// Pure n-qubit stabilizer state in full Aaronson-Gottesman form: n signed
/// stabilizer generators plus n destabilizers, so postselected measurement
/// costs O(n^2).
class StabilizerTableau {
 public:
  StabilizerTableau() = default;

  static StabilizerTableau zero_state(int n);
  static StabilizerTableau product_state(std::span<const SingleQubitState> states);
  /// Builds the state stabilized by `stabilizers` (n independent commuting
  /// Hermitian generators); destabilizers are completed by a GF(2) solve.
  static StabilizerTableau from_generators(const std::vector<PauliString>& stabilizers);

  int num_qubits() const { return n_; }
  const PauliString& stabilizer(int k) const { return stab_[k]; }
  const PauliString& destabilizer(int k) const { return destab_[k]; }

  void apply(Gate g, std::span<const int> qubits);
  void apply(const CliffordOp& op) { apply(op.gate, op.qubits); }
  void apply(std::span<const CliffordOp> ops);

  /// Projects `qubit` onto |0>. Returns the Born probability, always one of
  /// {0, 1/2, 1}; the state is updated unless the outcome is impossible
  /// (probability 0), in which case it is left untouched.
  double postselect_zero(int qubit);

  /// Tr(sigma a) for a Hermitian Pauli: +/-1 if a is (up to sign) in the
  /// stabilizer group, else 0.
  int expectation(const PauliString& a) const;

  /// Direct sum; `rhs` occupies the qubits after this tableau's.
  StabilizerTableau tensor(const StabilizerTableau& rhs) const;

  /// Coefficient vector with the 2^n group elements at +/-1.
  PauliVector pauli_vector() const;

 private:
  int n_ = 0;
  std::vector<PauliString> stab_;
  std::vector<PauliString> destab_;
};

/// Expectation value transferred through a gadgetized Clifford circuit:
/// prepares |0...0> on the data block and `sigma` on the ancilla block, runs
/// `u_cl`, postselects every ancilla onto |0>, and returns
/// 2^t * P(all zeros) * <a> on the postselected state. `a` acts on the data
/// block. Linear in sigma's Pauli vector.
double evaluate_gadget_expectation(std::span<const CliffordOp> u_cl,
                                   const StabilizerTableau& sigma, int n_data,
                                   int t_ancilla, const PauliString& a);

}  // namespace qpsim

#endif  // QPSIM_TABLEAU_HPP
