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

#ifndef QPSIM_GADGETS_HPP
#define QPSIM_GADGETS_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qpsim/channels.hpp"
#include "qpsim/pauli.hpp"

namespace qpsim {

/// A (possibly mixed) resource state produced by gadgetizing gates, plus the
/// metadata the reduced-basis construction needs.
struct ResourceState {
  PauliVector vector;
  std::vector<int> t_qubits;  // qubits carrying non-Clifford content
  std::string name;

  int num_qubits() const { return vector.num_qubits(); }
  ResourceState tensor(const ResourceState& rhs) const;
};

/// Correlated Z-type stochastic noise on ancilla qubits. Diagonal in the
/// Pauli basis, so it acts on coefficient vectors by per-label sign factors.
struct DiagonalNoise {
  int n = 0;
  std::vector<std::pair<double, PauliString>> terms;  // Z-type strings only

  void validate() const;
  PauliVector apply(const PauliVector& v) const;
  /// Noise acting on `qubits` of an n_total-qubit register.
  DiagonalNoise embed(int n_total, std::span<const int> qubits) const;
  /// this after rhs (both already on the same register).
  DiagonalNoise after(const DiagonalNoise& rhs) const;
};

/// |U(theta)><U(theta)| with Bloch vector (cos theta, sin theta, 0); the
/// resource state of the diagonal rotation gate.
ResourceState teleport_diagonal_gate(double theta);

/// (1-p)|U><U| + p Z|U><U|Z; dephasing after the rotation pushed onto the
/// resource.
ResourceState push_dephasing(double theta, double p);

struct NoiseTeleportResult {
  ResourceState resource;   // noiseless 2-qubit gadget resource CZ(|U>|+>)
  DiagonalNoise noise;      // teleported error: X -> Z2, Y -> Z1 Z2, Z -> Z1
  ResourceState noisy() const;
};

/// Rewrites one-qubit stochastic Pauli noise after a diagonal gate U(theta)
/// as correlated Z noise on the two-qubit teleportation resource. The noisy
/// resource equals [I] x ([H] o noise o [U]) applied to a Bell pair.
NoiseTeleportResult noise_teleport(double theta, const PauliChannel& noise);

/// Kraus labels with unchanged probabilities and conjugated operators,
/// representing the channel pulled back through a gate.
struct StochasticUnitaryChannel {
  int n = 0;
  std::vector<std::pair<double, std::vector<std::complex<double>>>> terms;

  Ptm ptm() const;
};

/// E o [U] = [U] o E' with E' = sum_i [U^dag E_i U]. For Clifford U the
/// result is again stochastic Pauli; for T / U(theta) the X and Y labels pull
/// back to (non-Pauli) Clifford rotations.
StochasticUnitaryChannel noise_fuse(const PauliChannel& noise, Gate u, double theta = 0.0);

/// Pauli-preserving fast path for Clifford gates.
PauliChannel noise_fuse_clifford(const PauliChannel& noise, Gate u, std::span<const int> qubits);

/// The depolarized T-gadget resource of the worked comparison: fold = 1 gives
/// E1(|T+><T+|), fold = 2 the noise-fused E1 o E1 (|T+><T+|).
ResourceState fused_t_resource(double p, int fold);

/// The four-qubit noisy unit-cell resources: kind 2 acts on |T+++>, kind 3 on
/// |T+T+>; both get per-gadget correlated noise E1 and the teleported
/// two-qubit-gate noise E2 across the gadget pairs.
ResourceState unit_cell_resource(int kind, double p);

/// The teleported two-qubit depolarizing noise E2 on four ancillas.
DiagonalNoise unit_cell_e2(double p);

/// E1 embedded on two given ancillas of an n-qubit register.
DiagonalNoise teleported_depo1(double p, int n_total, int z1_qubit, int z2_qubit);

}  // namespace qpsim

#endif  // QPSIM_GADGETS_HPP
