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

#include "qpsim/basis.hpp"

#include <doctest.h>

#include <set>

using namespace qpsim;

TEST_CASE("full basis counts match 2^n prod(2^k + 1)") {
  CHECK(full_basis_count(1) == 6);
  CHECK(full_basis_count(2) == 60);
  CHECK(full_basis_count(3) == 1080);
  CHECK(full_basis_count(4) == 36720);
  CHECK(full_stabilizer_basis(1).size() == 6);
  CHECK(full_stabilizer_basis(2).size() == 60);
  CHECK(full_stabilizer_basis(3).size() == 1080);
}

TEST_CASE("enumerated states are distinct and valid") {
  for (int n : {1, 2, 3}) {
    StabilizerBasis basis = full_stabilizer_basis(n);
    std::set<std::vector<std::pair<PauliLabel, int8_t>>> seen;
    for (size_t idx = 0; idx < basis.size(); ++idx) {
      const BasisColumn& col = basis.columns[idx];
      // Exactly 2^n entries, all +/-1, identity coefficient +1.
      CHECK(col.entries.size() == (size_t{1} << n));
      CHECK(col.entries.front().first == 0);
      CHECK(col.entries.front().second == 1);
      for (const auto& [label, sign] : col.entries) {
        CHECK((sign == 1 || sign == -1));
      }
      CHECK(seen.insert(col.entries).second);  // no duplicates
    }
  }
}

TEST_CASE("column tableaus reproduce the column coefficients") {
  StabilizerBasis basis = full_stabilizer_basis(2);
  for (size_t idx = 0; idx < basis.size(); ++idx) {
    StabilizerTableau t = basis.column_tableau(static_cast<int>(idx));
    PauliVector v = t.pauli_vector();
    PauliVector expect = basis.column_vector(static_cast<int>(idx));
    for (PauliLabel l = 0; l < v.size(); ++l) {
      CHECK(v[l] == doctest::Approx(expect[l]));
    }
  }
}

TEST_CASE("enumeration order is deterministic") {
  StabilizerBasis a = full_stabilizer_basis(2);
  StabilizerBasis b = full_stabilizer_basis(2);
  REQUIRE(a.size() == b.size());
  for (size_t idx = 0; idx < a.size(); ++idx) {
    CHECK(a.columns[idx].entries == b.columns[idx].entries);
  }
}

TEST_CASE("reduced basis counts match the pairing formula") {
  // All qubits t-carrying: 4^n n! sum_k 1/(8^k k! (n-2k)!).
  CHECK(reduced_basis_count(1, 1) == 4);
  CHECK(reduced_basis_count(2, 2) == 20);
  CHECK(reduced_basis_count(3, 3) == 112);
  CHECK(reduced_basis_count(4, 4) == 688);
  CHECK(reduced_basis_count(5, 5) == 4544);
  // Mixed registers.
  CHECK(reduced_basis_count(4, 1) == 4 * 8);
  CHECK(reduced_basis_count(8, 2) == (16 + 4) * 64);

  CHECK(reduced_pair_basis(1, {0}).size() == 4);
  CHECK(reduced_pair_basis(2, {0, 1}).size() == 20);
  CHECK(reduced_pair_basis(3, {0, 1, 2}).size() == 112);
  CHECK(reduced_pair_basis(4, {0, 1, 2, 3}).size() == 688);
  CHECK(reduced_pair_basis(4, {0}).size() == 32);
  CHECK(reduced_pair_basis(4, {0, 2}).size() == 80);
  CHECK(reduced_pair_basis(8, {0, 2, 4, 6}).size() == 11008);
}

TEST_CASE("reduced two-qubit basis contains the <XX,YY> state") {
  StabilizerBasis basis = reduced_pair_basis(2, {0, 1});
  // That state's coefficients: II +1, XX +1, YY +1, ZZ -1.
  std::vector<std::pair<PauliLabel, int8_t>> expect = {
      {0, 1},
      {PauliString::parse("XX").label(), 1},
      {PauliString::parse("YY").label(), 1},
      {PauliString::parse("ZZ").label(), -1},
  };
  std::sort(expect.begin(), expect.end());
  bool found = false;
  for (const auto& col : basis.columns) found |= (col.entries == expect);
  CHECK(found);
  // 16 separable + 4 entangled.
  int entangled = 0;
  for (const auto& col : basis.columns) {
    if (col.entries.back().first == PauliString::parse("ZZ").label()) ++entangled;
  }
  CHECK(entangled == 4);
}

TEST_CASE("reduced columns are valid stabilizer states") {
  StabilizerBasis basis = reduced_pair_basis(4, {0, 2});
  std::set<std::vector<std::pair<PauliLabel, int8_t>>> seen;
  for (size_t idx = 0; idx < basis.size(); ++idx) {
    const BasisColumn& col = basis.columns[idx];
    CHECK(col.entries.size() == 16);
    CHECK(seen.insert(col.entries).second);
    // The tableau construction validates commutation and independence.
    StabilizerTableau t = basis.column_tableau(static_cast<int>(idx));
    PauliVector v = t.pauli_vector();
    for (const auto& [label, sign] : col.entries) {
      CHECK(v[label] == doctest::Approx(static_cast<double>(sign)));
    }
  }
}

TEST_CASE("basis tags rebuild the same basis") {
  StabilizerBasis full = full_stabilizer_basis(2);
  StabilizerBasis full2 = basis_from_tag(full.tag);
  CHECK(full2.size() == full.size());
  StabilizerBasis reduced = reduced_pair_basis(4, {0, 2});
  StabilizerBasis reduced2 = basis_from_tag(reduced.tag);
  REQUIRE(reduced2.size() == reduced.size());
  for (size_t idx = 0; idx < reduced.size(); ++idx) {
    CHECK(reduced.columns[idx].entries == reduced2.columns[idx].entries);
  }
  CHECK_THROWS_AS(basis_from_tag("nonsense"), std::invalid_argument);
}
