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

#include "qpsim/pauli.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"

using namespace qpsim;
using qpsim::testing::dense_pauli_oracle;
using qpsim::testing::random_pauli;

TEST_CASE("single-letter products carry exact phases") {
  CHECK(PauliString::parse("X") * PauliString::parse("X") == PauliString::parse("+I"));
  CHECK(PauliString::parse("X") * PauliString::parse("Z") == PauliString::parse("-iY"));
  CHECK(PauliString::parse("Z") * PauliString::parse("X") == PauliString::parse("+iY"));
  CHECK(PauliString::parse("XI") * PauliString::parse("ZZ") == PauliString::parse("-iYZ"));
}

TEST_CASE("parse and print round-trip") {
  for (const char* text : {"+XIZ", "-iYY", "+iZ", "-X", "+IIII"}) {
    CHECK(PauliString::parse(text).str() == text);
  }
  CHECK(PauliString::parse("ZZ").str() == "+ZZ");
  CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
}

TEST_CASE("size mismatch is rejected") {
  CHECK_THROWS_AS(PauliString::parse("XX") * PauliString::parse("X"), std::invalid_argument);
  CHECK_THROWS_AS(commutes(PauliString::parse("XX"), PauliString::parse("X")),
                  std::invalid_argument);
}

TEST_CASE("multiplication matches the dense oracle") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    PauliString a = random_pauli(rng, n);
    PauliString b = random_pauli(rng, n);
    Eigen::MatrixXcd product = dense_pauli_oracle(a) * dense_pauli_oracle(b);
    CHECK((product - dense_pauli_oracle(a * b)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("commutes agrees with the dense commutator") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    PauliString a = random_pauli(rng, n);
    PauliString b = random_pauli(rng, n);
    Eigen::MatrixXcd am = dense_pauli_oracle(a), bm = dense_pauli_oracle(b);
    bool dense_commutes = (am * bm - bm * am).cwiseAbs().maxCoeff() < 1e-12;
    CHECK(commutes(a, b) == dense_commutes);
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    PauliString a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("Hermitian Paulis square to the identity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    PauliString p = random_pauli(rng, 1 + static_cast<int>(rng() % 4), /*hermitian=*/true);
    CHECK(p * p == PauliString::identity(p.num_qubits()));
  }
}

TEST_CASE("pauli_dense_matrix matches the explicit Kronecker oracle") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    PauliString p = random_pauli(rng, 1 + static_cast<int>(rng() % 3));
    std::vector<std::complex<double>> flat = pauli_dense_matrix(p);
    Eigen::MatrixXcd oracle = dense_pauli_oracle(p);
    size_t dim = oracle.rows();
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) {
        CHECK(std::abs(flat[r * dim + c] - oracle(r, c)) == 0.0);
      }
  }
}

TEST_CASE("pure-state Pauli vectors of the named states") {
  using cd = std::complex<double>;
  const double r = std::numbers::sqrt2 / 2.0;
  SUBCASE("|0>") {
    std::vector<cd> zero = {1.0, 0.0};
    PauliVector v = PauliVector::of_pure_state(zero);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(0.0));
    CHECK(v[2] == doctest::Approx(0.0));
    CHECK(v[3] == doctest::Approx(1.0));
  }
  SUBCASE("|+>") {
    std::vector<cd> plus = {r, r};
    PauliVector v = PauliVector::of_pure_state(plus);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(1.0));
    CHECK(v[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v[3] == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("|T> = U(pi/4)|+>") {
    std::vector<cd> t = {r, r * std::exp(cd(0.0, std::numbers::pi / 4.0))};
    PauliVector v = PauliVector::of_pure_state(t);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(r));
    CHECK(v[2] == doctest::Approx(r));
    CHECK(v[3] == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("non-normalized input throws") {
    std::vector<cd> bad = {1.0, 0.5};
    CHECK_THROWS_AS(PauliVector::of_pure_state(bad), std::invalid_argument);
  }
}

TEST_CASE("density round-trip reproduces coefficients to 1e-12") {
  std::mt19937_64 rng(2020);
  for (int n = 1; n <= 3; ++n) {
    size_t dim = size_t{1} << n;
    std::vector<std::complex<double>> psi(dim);
    std::normal_distribution<double> gauss;
    double norm = 0.0;
    for (auto& a : psi) {
      a = {gauss(rng), gauss(rng)};
      norm += std::norm(a);
    }
    for (auto& a : psi) a /= std::sqrt(norm);
    PauliVector v = PauliVector::of_pure_state(psi);
    PauliVector again = PauliVector::of_density(v.to_density(), n);
    for (PauliLabel l = 0; l < v.size(); ++l) {
      CHECK(std::abs(v[l] - again[l]) < 1e-12);
    }
    // Purity: sum of squared coefficients is 2^n.
    double purity = 0.0;
    for (PauliLabel l = 0; l < v.size(); ++l) purity += v[l] * v[l];
    CHECK(purity == doctest::Approx(static_cast<double>(dim)).epsilon(1e-12));
  }
}

TEST_CASE("tensor products act digit-wise") {
  std::vector<std::complex<double>> zero = {1.0, 0.0};
  const double r = std::numbers::sqrt2 / 2.0;
  std::vector<std::complex<double>> plus = {r, r};
  PauliVector a = PauliVector::of_pure_state(zero);
  PauliVector b = PauliVector::of_pure_state(plus);
  PauliVector ab = a.tensor(b);
  for (PauliLabel la = 0; la < 4; ++la)
    for (PauliLabel lb = 0; lb < 4; ++lb)
      CHECK(ab[la + (lb << 2)] == doctest::Approx(a[la] * b[lb]));
  CHECK(a.tensor_power(3).size() == 64);
}
