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

#include <doctest.h>

#include <numbers>

#include "qpsim/channels.hpp"
#include "qpsim/gadgets.hpp"

using namespace qpsim;
using cd = std::complex<double>;

namespace {

DenseState rotation_resource(double theta) {
  const double r = std::numbers::sqrt2 / 2.0;
  std::vector<cd> amps = {r, r * std::exp(cd(0, theta))};
  return DenseState::from_ket(amps);
}

}  // namespace

TEST_CASE("basic unitary evolution") {
  DenseState s = DenseState::zero_state(1);
  s.apply_gate(Gate::H, std::array{0});
  CHECK(s.expectation(PauliString::parse("X")) == doctest::Approx(1.0));
  s.apply_gate(Gate::RotZ, std::array{0}, 0.7);
  CHECK(s.expectation(PauliString::parse("X")) == doctest::Approx(std::cos(0.7)));
  CHECK(s.trace() == doctest::Approx(1.0));

  // T twice equals S.
  DenseState twice = DenseState::zero_state(1);
  twice.apply_gate(Gate::H, std::array{0});
  twice.apply_gate(Gate::T, std::array{0});
  twice.apply_gate(Gate::T, std::array{0});
  DenseState via_s = DenseState::zero_state(1);
  via_s.apply_gate(Gate::H, std::array{0});
  via_s.apply_gate(Gate::S, std::array{0});
  CHECK((twice.rho() - via_s.rho()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("stochastic Pauli channels") {
  SUBCASE("full depolarizing gives the maximally mixed state") {
    DenseState s = DenseState::zero_state(1);
    PauliChannel depo = PauliChannel::depolarizing1(1.0);
    s.apply_mixture(depo.terms);
    CHECK(s.rho()(0, 0).real() == doctest::Approx(0.5));
    CHECK(s.rho()(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(s.rho()(0, 1)) < 1e-12);
  }
  SUBCASE("half dephasing kills |+> coherence") {
    DenseState s = DenseState::product_state(std::array{SingleQubitState::Plus});
    s.apply_mixture(PauliChannel::dephasing(0.5).terms);
    CHECK(s.expectation(PauliString::parse("X")) == doctest::Approx(0.0));
    CHECK(s.trace() == doctest::Approx(1.0));
  }
  SUBCASE("two-qubit depolarizing damps Bell correlations by 1-p") {
    for (double p : {0.0, 0.25, 0.8}) {
      DenseState s = DenseState::zero_state(2);
      s.apply_gate(Gate::H, std::array{0});
      s.apply_gate(Gate::CNOT, std::array{0, 1});
      PauliChannel depo2 = PauliChannel::depolarizing2(p);
      s.apply_mixture(depo2.terms);
      CHECK(s.expectation(PauliString::parse("XX")) == doctest::Approx(1.0 - p));
      CHECK(s.min_eigenvalue() > -1e-9);
    }
  }
}

TEST_CASE("keystone: the teleportation gadget equals the direct rotation") {
  // Choi comparison: reference qubit 0, data qubit 1 prepared as a Bell pair,
  // resource on qubit 2, CNOT(data -> resource), postselect the resource
  // qubit onto |0>. The reduced state must match applying U(theta) directly.
  for (double theta = 0.0; theta <= std::numbers::pi / 2.0 + 1e-9;
       theta += std::numbers::pi / 16.0) {
    DenseState bell = DenseState::zero_state(2);
    bell.apply_gate(Gate::H, std::array{0});
    bell.apply_gate(Gate::CNOT, std::array{0, 1});

    DenseState gadget = bell.tensor(rotation_resource(theta));
    gadget.apply_gate(Gate::CNOT, std::array{1, 2});
    double prob = gadget.postselect_zero(2);
    CHECK(prob == doctest::Approx(0.5));
    DenseState reduced = gadget.partial_trace_keep(std::array{0, 1});

    DenseState direct = bell;
    direct.apply_gate(Gate::RotZ, std::array{1}, theta);
    CHECK((reduced.rho() - direct.rho()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("postselection renormalizes") {
  DenseState s = DenseState::zero_state(2);
  s.apply_gate(Gate::H, std::array{0});
  CHECK(s.postselect_zero(0) == doctest::Approx(0.5));
  CHECK(s.trace() == doctest::Approx(1.0));
  s.apply_gate(Gate::X, std::array{1});
  CHECK(s.postselect_zero(1) == doctest::Approx(0.0));
  CHECK(s.trace() == doctest::Approx(1.0));  // unchanged on impossible outcome
}

TEST_CASE("pauli_vector round-trips with the pauli module") {
  DenseState s = DenseState::zero_state(2);
  s.apply_gate(Gate::H, std::array{0});
  s.apply_gate(Gate::T, std::array{0});
  s.apply_gate(Gate::CNOT, std::array{0, 1});
  s.apply_mixture(PauliChannel::depolarizing2(0.1).terms);
  PauliVector v = s.pauli_vector();
  CHECK(v[0] == doctest::Approx(1.0));
  DenseState back = DenseState::from_pauli_vector(v);
  CHECK((back.rho() - s.rho()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace keeps marginals") {
  DenseState a = DenseState::product_state(std::array{SingleQubitState::PlusI});
  DenseState b = DenseState::product_state(std::array{SingleQubitState::One});
  DenseState ab = a.tensor(b);
  DenseState ra = ab.partial_trace_keep(std::array{0});
  DenseState rb = ab.partial_trace_keep(std::array{1});
  CHECK((ra.rho() - a.rho()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((rb.rho() - b.rho()).cwiseAbs().maxCoeff() < 1e-12);
}
