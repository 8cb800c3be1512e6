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

#ifndef QPSIM_GATES_HPP
#define QPSIM_GATES_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qpsim/pauli.hpp"

namespace qpsim {

/// Named gates. The Clifford subset drives tableau updates and signed
/// permutation PTMs; T and RotZ (the diagonal rotation U(theta)) are the
/// supported non-Clifford gates.
enum class Gate : uint8_t {
  H,
  S,
  Sdg,
  SqrtX,
  SqrtY,
  X,
  Y,
  Z,
  CNOT,
  CZ,
  SWAP,
  T,
  RotZ,
};

bool is_clifford(Gate g);
int gate_arity(Gate g);
std::string_view gate_name(Gate g);
Gate gate_from_name(std::string_view name);

/// Dense unitary, row-major, dimension 2 (arity 1) or 4 (arity 2). For a
/// two-qubit gate, qubits[0] is the most significant index bit. `theta` is
/// only read for RotZ.
std::vector<std::complex<double>> gate_matrix(Gate g, double theta = 0.0);

/// Conjugation action of a Clifford gate on the local Pauli labels: label l
/// maps to sign[l] * image[l]. Local labels follow the usual digit packing
/// with qubits[0] in the least significant digit.
struct CliffordAction {
  std::array<uint8_t, 16> image{};
  std::array<int8_t, 16> sign{};
};
const CliffordAction& clifford_action(Gate g);

/// The six single-qubit stabilizer states, used as circuit inputs.
enum class SingleQubitState : uint8_t { Zero, One, Plus, Minus, PlusI, MinusI };

SingleQubitState single_state_from_token(std::string_view token);  // "0","1","+","-","+i","-i"
std::string_view single_state_token(SingleQubitState s);
std::array<std::complex<double>, 2> single_state_ket(SingleQubitState s);
/// Tr(rho_s * letter) for letter digit 0..3; always one of -1, 0, +1.
int single_state_pauli_expect(SingleQubitState s, int letter_digit);
/// The +1 stabilizer generator of the state ("Z", "-Z", "X", ...).
PauliString single_state_stabilizer(SingleQubitState s);

}  // namespace qpsim

#endif  // QPSIM_GATES_HPP
