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

#include <doctest.h>

#include "test_helpers.hpp"

using namespace qpsim;

namespace {

// Clifford actions must reproduce dense conjugation sign-exactly.
void check_action(Gate g) {
  const CliffordAction& action = clifford_action(g);
  int arity = gate_arity(g);
  int labels = arity == 1 ? 4 : 16;
  Eigen::MatrixXcd u(arity == 1 ? 2 : 4, arity == 1 ? 2 : 4);
  auto flat = gate_matrix(g);
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    for (Eigen::Index c = 0; c < u.cols(); ++c) u(r, c) = flat[r * u.cols() + c];
  for (int l = 0; l < labels; ++l) {
    PauliString p = PauliString::from_label(arity, l);
    Eigen::MatrixXcd conj = u * qpsim::testing::dense_pauli_oracle(p) * u.adjoint();
    PauliString q = PauliString::from_label(arity, action.image[l]);
    Eigen::MatrixXcd expect = static_cast<double>(action.sign[l]) *
                              qpsim::testing::dense_pauli_oracle(q);
    CHECK((conj - expect).cwiseAbs().maxCoeff() < 1e-12);
  }
}

}  // namespace

TEST_CASE("Clifford actions agree with dense conjugation") {
  for (Gate g : {Gate::H, Gate::S, Gate::Sdg, Gate::SqrtX, Gate::SqrtY, Gate::X, Gate::Y,
                 Gate::Z, Gate::CNOT, Gate::CZ, Gate::SWAP}) {
    check_action(g);
  }
}

TEST_CASE("gate names round-trip") {
  for (Gate g : {Gate::H, Gate::S, Gate::Sdg, Gate::SqrtX, Gate::SqrtY, Gate::X, Gate::Y,
                 Gate::Z, Gate::CNOT, Gate::CZ, Gate::SWAP, Gate::T, Gate::RotZ}) {
    CHECK(gate_from_name(gate_name(g)) == g);
  }
  CHECK_THROWS_AS(gate_from_name("BOGUS"), std::invalid_argument);
  CHECK_THROWS_AS(clifford_action(Gate::T), std::invalid_argument);
}

TEST_CASE("single-qubit states are consistent") {
  for (SingleQubitState s :
       {SingleQubitState::Zero, SingleQubitState::One, SingleQubitState::Plus,
        SingleQubitState::Minus, SingleQubitState::PlusI, SingleQubitState::MinusI}) {
    CHECK(single_state_from_token(single_state_token(s)) == s);
    auto ket = single_state_ket(s);
    std::vector<std::complex<double>> amps(ket.begin(), ket.end());
    PauliVector v = PauliVector::of_pure_state(amps);
    for (int d = 0; d < 4; ++d) {
      CHECK(v[d] == doctest::Approx(single_state_pauli_expect(s, d)).epsilon(1e-12));
    }
    // The advertised stabilizer really fixes the state.
    PauliString stab = single_state_stabilizer(s);
    CHECK(v[stab.label()] * stab.sign() == doctest::Approx(1.0));
  }
}
