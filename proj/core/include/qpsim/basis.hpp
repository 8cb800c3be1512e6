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

#ifndef QPSIM_BASIS_HPP
#define QPSIM_BASIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qpsim/pauli.hpp"
#include "qpsim/tableau.hpp"

namespace qpsim {

/// One stabilizer state viewed as an LP column: its nonzero Pauli
/// coefficients (2^n entries, all +/-1, identity first) plus the signed
/// generators it is built from.
struct BasisColumn {
  std::vector<std::pair<PauliLabel, int8_t>> entries;  // sorted by label
  std::vector<PauliString> generators;
};

/// A set of stabilizer states used to decompose resource states. The column
/// order is deterministic, so decomposition files can reference states by
/// index.
struct StabilizerBasis {
  int n = 0;
  std::string tag;
  std::vector<BasisColumn> columns;

  size_t size() const { return columns.size(); }
  PauliVector column_vector(int idx) const;
  StabilizerTableau column_tableau(int idx) const;
};

/// Every pure stabilizer state on n <= 4 qubits: all maximal commuting
/// subgroups found by a canonical generator search, times all 2^n sign
/// patterns. Counts are 6, 60, 1080, 36720 for n = 1..4.
StabilizerBasis full_stabilizer_basis(int n);

/// 2^n * prod_{k=1..n} (2^k + 1).
uint64_t full_basis_count(int n);

/// The reduced decomposition basis for resource states whose non-Clifford
/// content sits on `t_qubits`: products of {|+>,|->,|+i>,|-i>} on those
/// qubits and {|+>,|->} elsewhere, plus, for every set of disjoint pairs of
/// t-qubits, the four X/Y-entangled pair states stabilized by
/// <XX,YY>, <-XX,-YY>, <XY,YX>, <-XY,-YX>.
StabilizerBasis reduced_pair_basis(int n, const std::vector<int>& t_qubits);

/// Column count of reduced_pair_basis: 2^(n - nt) * sum_k pairings * 4^k *
/// 4^(nt - 2k); equals 4^n n! sum_k {8^k k! (n-2k)!}^-1 when every qubit is
/// a t-qubit.
uint64_t reduced_basis_count(int n, int n_t);

/// Basis reconstruction from its tag ("full-n2", "reduced-n4-t0,2", ...).
StabilizerBasis basis_from_tag(const std::string& tag);

}  // namespace qpsim

#endif  // QPSIM_BASIS_HPP
