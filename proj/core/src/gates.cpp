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

#include "qpsim/gates.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace qpsim {

namespace {

using cd = std::complex<double>;
constexpr cd kI(0.0, 1.0);

std::vector<cd> mat2(cd a, cd b, cd c, cd d) { return {a, b, c, d}; }

}  // namespace

bool is_clifford(Gate g) { return g != Gate::T && g != Gate::RotZ; }

int gate_arity(Gate g) {
  switch (g) {
    case Gate::CNOT:
    case Gate::CZ:
    case Gate::SWAP:
      return 2;
    default:
      return 1;
  }
}

std::string_view gate_name(Gate g) {
  switch (g) {
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::Sdg: return "Sdg";
    case Gate::SqrtX: return "SqrtX";
    case Gate::SqrtY: return "SqrtY";
    case Gate::X: return "X";
    case Gate::Y: return "Y";
    case Gate::Z: return "Z";
    case Gate::CNOT: return "CNOT";
    case Gate::CZ: return "CZ";
    case Gate::SWAP: return "SWAP";
    case Gate::T: return "T";
    case Gate::RotZ: return "RotZ";
  }
  return "?";
}

Gate gate_from_name(std::string_view name) {
  static const std::unordered_map<std::string_view, Gate> kNames = {
      {"H", Gate::H},         {"S", Gate::S},         {"Sdg", Gate::Sdg},
      {"S†", Gate::Sdg},      {"SqrtX", Gate::SqrtX}, {"SqrtY", Gate::SqrtY},
      {"X", Gate::X},         {"Y", Gate::Y},         {"Z", Gate::Z},
      {"CNOT", Gate::CNOT},   {"CX", Gate::CNOT},     {"CZ", Gate::CZ},
      {"SWAP", Gate::SWAP},   {"T", Gate::T},         {"RotZ", Gate::RotZ},
      {"U", Gate::RotZ},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) {
    throw std::invalid_argument("unknown gate name: " + std::string(name));
  }
  return it->second;
}

std::vector<cd> gate_matrix(Gate g, double theta) {
  const double s = std::numbers::sqrt2 / 2.0;
  switch (g) {
    case Gate::H:
      return mat2(s, s, s, -s);
    case Gate::S:
      return mat2(1, 0, 0, kI);
    case Gate::Sdg:
      return mat2(1, 0, 0, -kI);
    case Gate::SqrtX:
      // (I - iX)/sqrt(2); conjugation: X -> X, Z -> -Y, Y -> Z.
      return mat2(s, -kI * s, -kI * s, s);
    case Gate::SqrtY:
      // (I - iY)/sqrt(2); conjugation: X -> -Z, Z -> X, Y -> Y.
      return mat2(s, -s, s, s);
    case Gate::X:
      return mat2(0, 1, 1, 0);
    case Gate::Y:
      return mat2(0, -kI, kI, 0);
    case Gate::Z:
      return mat2(1, 0, 0, -1);
    case Gate::T:
      return mat2(1, 0, 0, std::exp(kI * (std::numbers::pi / 4.0)));
    case Gate::RotZ:
      return mat2(1, 0, 0, std::exp(kI * theta));
    case Gate::CNOT:
      return {1, 0, 0, 0,  0, 1, 0, 0,  0, 0, 0, 1,  0, 0, 1, 0};
    case Gate::CZ:
      return {1, 0, 0, 0,  0, 1, 0, 0,  0, 0, 1, 0,  0, 0, 0, -1};
    case Gate::SWAP:
      return {1, 0, 0, 0,  0, 0, 1, 0,  0, 1, 0, 0,  0, 0, 0, 1};
  }
  throw std::logic_error("unreachable");
}

namespace {

// Builds the signed Pauli permutation of a Clifford gate by dense
// conjugation, so tableau updates, PTMs and the dense oracle can never
// disagree on sign conventions.
CliffordAction build_action(Gate g) {
  int arity = gate_arity(g);
  size_t dim = arity == 1 ? 2 : 4;
  int labels = arity == 1 ? 4 : 16;
  std::vector<cd> u = gate_matrix(g);
  CliffordAction action;
  for (int l = 0; l < labels; ++l) {
    // Local label digits map qubits[0] to the least significant digit, while
    // the dense matrix has qubits[0] as the most significant bit; PauliString
    // uses the same convention, with string qubit q at matrix bit (n-1-q).
    PauliString p = PauliString::from_label(arity, static_cast<PauliLabel>(l));
    std::vector<cd> pm = pauli_dense_matrix(p);
    // m = U P U^dagger
    std::vector<cd> up(dim * dim, 0.0), m(dim * dim, 0.0);
    for (size_t r = 0; r < dim; ++r)
      for (size_t k = 0; k < dim; ++k) {
        if (u[r * dim + k] == cd(0.0)) continue;
        for (size_t c = 0; c < dim; ++c) up[r * dim + c] += u[r * dim + k] * pm[k * dim + c];
      }
    for (size_t r = 0; r < dim; ++r)
      for (size_t k = 0; k < dim; ++k) {
        if (up[r * dim + k] == cd(0.0)) continue;
        for (size_t c = 0; c < dim; ++c) m[r * dim + c] += up[r * dim + k] * std::conj(u[c * dim + k]);
      }
    bool found = false;
    for (int q = 0; q < labels && !found; ++q) {
      std::vector<cd> qm = pauli_dense_matrix(PauliString::from_label(arity, static_cast<PauliLabel>(q)));
      cd overlap = 0.0;
      for (size_t i = 0; i < dim * dim; ++i) overlap += std::conj(qm[i]) * m[i];
      overlap /= static_cast<double>(dim);
      if (std::abs(std::abs(overlap) - 1.0) < 1e-9) {
        if (std::abs(overlap.imag()) > 1e-9) {
          throw std::logic_error("non-Clifford conjugation phase");
        }
        action.image[l] = static_cast<uint8_t>(q);
        action.sign[l] = overlap.real() > 0 ? 1 : -1;
        found = true;
      }
    }
    if (!found) throw std::logic_error("gate is not Clifford");
  }
  return action;
}

}  // namespace

const CliffordAction& clifford_action(Gate g) {
  if (!is_clifford(g)) {
    throw std::invalid_argument("clifford_action: gate is not Clifford");
  }
  static std::mutex mu;
  static std::unordered_map<int, CliffordAction> cache;
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace(static_cast<int>(g));
  if (inserted) it->second = build_action(g);
  return it->second;
}

SingleQubitState single_state_from_token(std::string_view token) {
  if (token == "0") return SingleQubitState::Zero;
  if (token == "1") return SingleQubitState::One;
  if (token == "+") return SingleQubitState::Plus;
  if (token == "-") return SingleQubitState::Minus;
  if (token == "+i") return SingleQubitState::PlusI;
  if (token == "-i") return SingleQubitState::MinusI;
  throw std::invalid_argument("unknown state token: " + std::string(token));
}

std::string_view single_state_token(SingleQubitState s) {
  switch (s) {
    case SingleQubitState::Zero: return "0";
    case SingleQubitState::One: return "1";
    case SingleQubitState::Plus: return "+";
    case SingleQubitState::Minus: return "-";
    case SingleQubitState::PlusI: return "+i";
    case SingleQubitState::MinusI: return "-i";
  }
  return "?";
}

std::array<cd, 2> single_state_ket(SingleQubitState s) {
  const double r = std::numbers::sqrt2 / 2.0;
  switch (s) {
    case SingleQubitState::Zero: return {1.0, 0.0};
    case SingleQubitState::One: return {0.0, 1.0};
    case SingleQubitState::Plus: return {r, r};
    case SingleQubitState::Minus: return {r, -r};
    case SingleQubitState::PlusI: return {r, kI * r};
    case SingleQubitState::MinusI: return {r, -kI * r};
  }
  throw std::logic_error("unreachable");
}

int single_state_pauli_expect(SingleQubitState s, int letter_digit) {
  if (letter_digit == 0) return 1;
  switch (s) {
    case SingleQubitState::Zero: return letter_digit == 3 ? 1 : 0;
    case SingleQubitState::One: return letter_digit == 3 ? -1 : 0;
    case SingleQubitState::Plus: return letter_digit == 1 ? 1 : 0;
    case SingleQubitState::Minus: return letter_digit == 1 ? -1 : 0;
    case SingleQubitState::PlusI: return letter_digit == 2 ? 1 : 0;
    case SingleQubitState::MinusI: return letter_digit == 2 ? -1 : 0;
  }
  return 0;
}

PauliString single_state_stabilizer(SingleQubitState s) {
  switch (s) {
    case SingleQubitState::Zero: return PauliString::parse("+Z");
    case SingleQubitState::One: return PauliString::parse("-Z");
    case SingleQubitState::Plus: return PauliString::parse("+X");
    case SingleQubitState::Minus: return PauliString::parse("-X");
    case SingleQubitState::PlusI: return PauliString::parse("+Y");
    case SingleQubitState::MinusI: return PauliString::parse("-Y");
  }
  throw std::logic_error("unreachable");
}

}  // namespace qpsim
