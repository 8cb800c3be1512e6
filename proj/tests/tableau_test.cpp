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

#include "qpsim/tableau.hpp"

#include <doctest.h>

#include <numbers>

#include "qpsim/basis.hpp"
#include "qpsim/dense.hpp"

using namespace qpsim;

TEST_CASE("named gate actions on small states") {
  SUBCASE("H maps |0> to |+>") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    t.apply(Gate::H, std::array{0});
    CHECK(t.expectation(PauliString::parse("X")) == 1);
    CHECK(t.expectation(PauliString::parse("Z")) == 0);
  }
  SUBCASE("CNOT builds a Bell pair") {
    StabilizerTableau t = StabilizerTableau::zero_state(2);
    t.apply(Gate::H, std::array{0});
    t.apply(Gate::CNOT, std::array{0, 1});
    CHECK(t.expectation(PauliString::parse("XX")) == 1);
    CHECK(t.expectation(PauliString::parse("ZZ")) == 1);
    CHECK(t.expectation(PauliString::parse("-YY")) == 1);
    CHECK(t.expectation(PauliString::parse("XI")) == 0);
  }
  SUBCASE("S maps |+> to |+i>") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    t.apply(Gate::H, std::array{0});
    t.apply(Gate::S, std::array{0});
    CHECK(t.expectation(PauliString::parse("Y")) == 1);
  }
}

TEST_CASE("postselection probabilities are exact") {
  SUBCASE("|0> stays |0> with probability 1") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    CHECK(t.postselect_zero(0) == 1.0);
    CHECK(t.expectation(PauliString::parse("Z")) == 1);
  }
  SUBCASE("|+> collapses with probability 1/2") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    t.apply(Gate::H, std::array{0});
    CHECK(t.postselect_zero(0) == 0.5);
    CHECK(t.expectation(PauliString::parse("Z")) == 1);
  }
  SUBCASE("|1> is impossible") {
    StabilizerTableau t = StabilizerTableau::zero_state(1);
    t.apply(Gate::X, std::array{0});
    CHECK(t.postselect_zero(0) == 0.0);
    CHECK(t.expectation(PauliString::parse("Z")) == -1);  // untouched
  }
}

TEST_CASE("tableau evolution matches the dense oracle on all 2-qubit states") {
  StabilizerBasis basis = full_stabilizer_basis(2);
  std::vector<std::pair<Gate, std::vector<int>>> ops = {
      {Gate::H, {0}},      {Gate::S, {1}},      {Gate::Sdg, {0}}, {Gate::SqrtX, {1}},
      {Gate::SqrtY, {0}},  {Gate::X, {1}},      {Gate::Y, {0}},   {Gate::Z, {1}},
      {Gate::CNOT, {0, 1}}, {Gate::CNOT, {1, 0}}, {Gate::CZ, {0, 1}}, {Gate::SWAP, {0, 1}},
  };
  for (size_t idx = 0; idx < basis.size(); idx += 3) {
    StabilizerTableau t = basis.column_tableau(static_cast<int>(idx));
    DenseState d = DenseState::from_pauli_vector(t.pauli_vector());
    for (const auto& [gate, qubits] : ops) {
      t.apply(gate, qubits);
      d.apply_gate(gate, qubits);
    }
    PauliVector tv = t.pauli_vector();
    PauliVector dv = d.pauli_vector();
    for (PauliLabel l = 0; l < tv.size(); ++l) {
      CHECK(tv[l] == doctest::Approx(dv[l]).epsilon(1e-10));
    }
  }
}

TEST_CASE("postselection matches dense projection statistics") {
  StabilizerBasis basis = full_stabilizer_basis(2);
  for (size_t idx = 0; idx < basis.size(); idx += 5) {
    for (int qubit = 0; qubit < 2; ++qubit) {
      StabilizerTableau t = basis.column_tableau(static_cast<int>(idx));
      DenseState d = DenseState::from_pauli_vector(t.pauli_vector());
      double pt = t.postselect_zero(qubit);
      double pd = d.postselect_zero(qubit);
      CHECK(pt == doctest::Approx(pd).epsilon(1e-12));
      if (pt > 0.0) {
        PauliVector tv = t.pauli_vector();
        PauliVector dv = d.pauli_vector();
        for (PauliLabel l = 0; l < tv.size(); ++l) {
          CHECK(tv[l] == doctest::Approx(dv[l]).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("from_generators completes valid destabilizers") {
  std::vector<PauliString> gens = {PauliString::parse("+XX"), PauliString::parse("-YY")};
  StabilizerTableau t = StabilizerTableau::from_generators(gens);
  CHECK(t.expectation(PauliString::parse("+XX")) == 1);
  CHECK(t.expectation(PauliString::parse("-YY")) == 1);
  CHECK(t.expectation(PauliString::parse("+ZZ")) == 1);  // product of the two
  CHECK(t.expectation(PauliString::parse("XI")) == 0);
  CHECK_THROWS_AS(StabilizerTableau::from_generators(
                      {PauliString::parse("+XX"), PauliString::parse("+ZI")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StabilizerTableau::from_generators(
                      {PauliString::parse("+XX"), PauliString::parse("-XX")}),
                  std::invalid_argument);
}

TEST_CASE("gadget expectation reproduces teleported rotations on stabilizer resources") {
  // CNOT(data -> ancilla) plus postselection teleports U(theta) when the
  // ancilla holds U(theta)|+>; theta = 0 and pi/2 give stabilizer resources.
  std::vector<CliffordOp> gadget = {
      {Gate::H, {0}},
      {Gate::CNOT, {0, 1}},
  };
  SUBCASE("identity rotation on |+>") {
    StabilizerTableau plus = StabilizerTableau::product_state(std::array{SingleQubitState::Plus});
    double val = evaluate_gadget_expectation(gadget, plus, 1, 1, PauliString::parse("X"));
    CHECK(val == doctest::Approx(1.0));
  }
  SUBCASE("S rotation on |+> gives <Y> = 1") {
    StabilizerTableau plus_i =
        StabilizerTableau::product_state(std::array{SingleQubitState::PlusI});
    double val = evaluate_gadget_expectation(gadget, plus_i, 1, 1, PauliString::parse("Y"));
    CHECK(val == doctest::Approx(1.0));
  }
  SUBCASE("trivial circuit with no ancilla") {
    std::vector<CliffordOp> none;
    double val = evaluate_gadget_expectation(none, StabilizerTableau::zero_state(0), 1, 0,
                                             PauliString::parse("Z"));
    CHECK(val == doctest::Approx(1.0));
  }
}

TEST_CASE("gadget expectation is linear in the resource vector") {
  // Evaluate a T gadget on a mixture of |+> and |+i> two ways.
  std::vector<CliffordOp> gadget = {
      {Gate::H, {0}},
      {Gate::CNOT, {0, 1}},
  };
  StabilizerTableau plus = StabilizerTableau::product_state(std::array{SingleQubitState::Plus});
  StabilizerTableau plus_i = StabilizerTableau::product_state(std::array{SingleQubitState::PlusI});
  PauliString obs = PauliString::parse("X");
  double a = evaluate_gadget_expectation(gadget, plus, 1, 1, obs);
  double b = evaluate_gadget_expectation(gadget, plus_i, 1, 1, obs);
  // Dense evaluation of the mixed resource 0.3|+> + 0.7|+i>.
  DenseState data = DenseState::product_state(std::array{SingleQubitState::Plus});
  DenseState mix_plus = data.tensor(DenseState::product_state(std::array{SingleQubitState::Plus}));
  DenseState mix_plusi =
      data.tensor(DenseState::product_state(std::array{SingleQubitState::PlusI}));
  Eigen::MatrixXcd mixed = 0.3 * mix_plus.rho() + 0.7 * mix_plusi.rho();
  DenseState gadget_state = DenseState::from_density(mixed);
  gadget_state.apply_gate(Gate::CNOT, std::array{0, 1});
  double prob = gadget_state.postselect_zero(1);
  double direct = 2.0 * prob * gadget_state.expectation(PauliString::parse("XI"));
  CHECK(direct == doctest::Approx(0.3 * a + 0.7 * b).epsilon(1e-10));
}

TEST_CASE("tensor places blocks on disjoint qubits") {
  StabilizerTableau bell = StabilizerTableau::zero_state(2);
  bell.apply(Gate::H, std::array{0});
  bell.apply(Gate::CNOT, std::array{0, 1});
  StabilizerTableau prod = bell.tensor(StabilizerTableau::product_state(
      std::array{SingleQubitState::Minus}));
  CHECK(prod.num_qubits() == 3);
  CHECK(prod.expectation(PauliString::parse("XXI")) == 1);
  CHECK(prod.expectation(PauliString::parse("-IIX")) == 1);
}
