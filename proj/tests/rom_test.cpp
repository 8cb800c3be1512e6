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

#include "qpsim/rom.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpsim/gadgets.hpp"

using namespace qpsim;

namespace {

PauliVector t_state_vector(int copies) {
  return teleport_diagonal_gate(std::numbers::pi / 4.0).vector.tensor_power(copies);
}

}  // namespace

TEST_CASE("stabilizer states and mixtures have robustness 1") {
  StabilizerBasis basis = full_stabilizer_basis(1);
  SUBCASE("|+>") {
    PauliVector target = teleport_diagonal_gate(0.0).vector;
    QuasiDecomposition d = rom(target, basis);
    CHECK(d.l1 == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("maximally mixed") {
    PauliVector target(1);
    target[0] = 1.0;
    QuasiDecomposition d = rom(target, basis);
    CHECK(d.l1 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d.coefficient_sum() == doctest::Approx(1.0).epsilon(1e-7));
  }
  SUBCASE("every basis column decomposes to itself") {
    for (size_t idx = 0; idx < basis.size(); ++idx) {
      QuasiDecomposition d = rom(basis.column_vector(static_cast<int>(idx)), basis);
      CHECK(d.l1 == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("magic-state robustness reference values") {
  // 1.414214 / 1.747547 / 2.218951 for one to three copies over the full
  // basis; four copies run in the acceptance suite.
  StabilizerBasis b1 = full_stabilizer_basis(1);
  QuasiDecomposition d1 = rom(t_state_vector(1), b1);
  CHECK(d1.l1 == doctest::Approx(1.414214).epsilon(1e-5));
  CHECK(d1.coefficient_sum() == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(d1.residual <= 1e-7);

  StabilizerBasis b2 = full_stabilizer_basis(2);
  QuasiDecomposition d2 = rom(t_state_vector(2), b2);
  CHECK(d2.l1 == doctest::Approx(1.747547).epsilon(1e-5));

  StabilizerBasis b3 = full_stabilizer_basis(3);
  QuasiDecomposition d3 = rom(t_state_vector(3), b3);
  CHECK(d3.l1 == doctest::Approx(2.218951).epsilon(1e-5));
}

TEST_CASE("LP certificate: dual objective equals l1") {
  StabilizerBasis b2 = full_stabilizer_basis(2);
  QuasiDecomposition d = rom(t_state_vector(2), b2);
  CHECK(d.dual_objective == doctest::Approx(d.l1).epsilon(1e-6));
}

TEST_CASE("single-qubit LP matches the analytic Bloch oracle") {
  for (double theta = 0.0; theta <= std::numbers::pi / 2.0 + 1e-9; theta += 0.19635) {
    for (double p = 0.0; p <= 0.5 + 1e-12; p += 0.05) {
      double lp = rom_dephased_rotation(theta, p);
      double analytic = rom_dephased_rotation_analytic(theta, p);
      CHECK(lp == doctest::Approx(analytic).epsilon(1e-7));
    }
  }
}

TEST_CASE("dephased-rotation reference points") {
  CHECK(rom_dephased_rotation(std::numbers::pi / 4.0, 0.0) ==
        doctest::Approx(std::numbers::sqrt2).epsilon(1e-7));
  CHECK(rom_dephased_rotation(0.0, 0.3) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rom_dephased_rotation(std::numbers::pi / 4.0, 0.25) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("robustness never increases with dephasing") {
  double prev = std::numeric_limits<double>::infinity();
  for (double p = 0.0; p <= 0.5 + 1e-12; p += 0.05) {
    double value = rom_dephased_rotation(std::numbers::pi / 4.0, p);
    CHECK(value <= prev + 1e-9);
    prev = value;
  }
}

TEST_CASE("reduced-basis bounds match the exact values on T copies") {
  SUBCASE("two copies") {
    StabilizerBasis reduced = reduced_pair_basis(2, {0, 1});
    QuasiDecomposition d = rom_upper_bound(t_state_vector(2), reduced);
    CHECK(d.l1 == doctest::Approx(1.747547).epsilon(1e-5));
  }
  SUBCASE("three copies") {
    StabilizerBasis reduced = reduced_pair_basis(3, {0, 1, 2});
    QuasiDecomposition d = rom_upper_bound(t_state_vector(3), reduced);
    CHECK(d.l1 == doctest::Approx(2.218951).epsilon(1e-5));
  }
  SUBCASE("a reduced column as target") {
    StabilizerBasis reduced = reduced_pair_basis(2, {0, 1});
    QuasiDecomposition d = rom_upper_bound(reduced.column_vector(17), reduced);
    CHECK(d.l1 == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("reduced bound is never below the exact robustness") {
  // Random dephased-T pair states: solve over the full 2-qubit basis and the
  // reduced one.
  StabilizerBasis full = full_stabilizer_basis(2);
  StabilizerBasis reduced = reduced_pair_basis(2, {0, 1});
  for (double p : {0.0, 0.08, 0.2, 0.45}) {
    PauliVector target =
        push_dephasing(std::numbers::pi / 4.0, p).vector.tensor(push_dephasing(1.1, 2 * p).vector);
    double exact = rom(target, full).l1;
    double bound = rom_upper_bound(target, reduced).l1;
    CHECK(bound >= exact - 1e-7);
  }
}

TEST_CASE("targets outside the span are reported infeasible") {
  // |0><0| has a Z coefficient; the X/Y-plane reduced basis cannot reach it.
  PauliVector zero_state(1);
  zero_state[0] = 1.0;
  zero_state[3] = 1.0;
  StabilizerBasis reduced = reduced_pair_basis(1, {0});
  CHECK_THROWS_AS(rom(zero_state, reduced), InfeasibleError);
}

TEST_CASE("warm starts reproduce cold solves across a noise sweep") {
  // The entangled gadget resource needs the full basis; that is also the
  // realistic sweep workload.
  StabilizerBasis full = full_stabilizer_basis(2);
  std::vector<int32_t> warm;
  for (double p = 0.0; p <= 0.3 + 1e-12; p += 0.05) {
    PauliVector target = fused_t_resource(p, 1).vector;
    RomOptions opt;
    opt.warm_basis = warm.empty() ? nullptr : &warm;
    QuasiDecomposition warm_d = rom(target, full, opt);
    warm = warm_d.lp_basis;
    QuasiDecomposition cold_d = rom(target, full);
    CHECK(warm_d.l1 == doctest::Approx(cold_d.l1).epsilon(1e-8));
  }
}

TEST_CASE("submultiplicative bounds") {
  CHECK(power_per_copy(std::numbers::sqrt2, 1, 2) == doctest::Approx(2.0));
  CHECK(power_per_copy(3.687052, 5, 5) == doctest::Approx(3.687052));
  // Squared five-copy bound scales like 2^(0.75298 t).
  double log2_rate = 2.0 * std::log2(3.687052) / 5.0;
  CHECK(log2_rate == doctest::Approx(0.75298).epsilon(1e-4));
  CHECK(submultiplicative_bound({{std::numbers::sqrt2, 2.0}, {1.747547, 1.0}}) ==
        doctest::Approx(2.0 * 1.747547).epsilon(1e-9));
  CHECK_THROWS_AS(power_per_copy(-1.0, 1, 1), std::invalid_argument);
}

TEST_CASE("appending stabilizer factors never changes the robustness") {
  StabilizerBasis b1 = full_stabilizer_basis(1);
  StabilizerBasis b2 = full_stabilizer_basis(2);
  StabilizerBasis b3 = full_stabilizer_basis(3);
  PauliVector plus = teleport_diagonal_gate(0.0).vector;
  for (double p : {0.0, 0.15}) {
    PauliVector t1 = push_dephasing(std::numbers::pi / 4.0, p).vector;
    double r1 = rom(t1, b1).l1;
    CHECK(rom(t1.tensor(plus), b2).l1 == doctest::Approx(r1).epsilon(1e-6));
    CHECK(rom(plus.tensor(t1).tensor(plus), b3).l1 == doctest::Approx(r1).epsilon(1e-6));
  }
}
