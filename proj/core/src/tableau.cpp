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

#include <bit>
#include <stdexcept>

namespace qpsim {

namespace {

// Symplectic inner product of the (x|z) bit representations; 1 = anticommute.
int symplectic(const PauliString& a, const PauliString& b) {
  uint64_t cross = (a.x_mask() & b.z_mask()) ^ (a.z_mask() & b.x_mask());
  return std::popcount(cross) & 1;
}

// Rewrites the letters of `row` at `qubits` through a signed Pauli
// permutation.
void conjugate_row(PauliString& row, const CliffordAction& action, std::span<const int> qubits) {
  int local = 0;
  for (size_t k = 0; k < qubits.size(); ++k) {
    local |= row.letter(qubits[k]) << (2 * k);
  }
  int image = action.image[local];
  uint64_t x = row.x_mask(), z = row.z_mask();
  for (size_t k = 0; k < qubits.size(); ++k) {
    uint64_t bit = uint64_t{1} << qubits[k];
    int d = (image >> (2 * k)) & 3;
    x = (d == 1 || d == 2) ? (x | bit) : (x & ~bit);
    z = (d == 2 || d == 3) ? (z | bit) : (z & ~bit);
  }
  uint8_t phase = row.phase_exp();
  if (action.sign[local] < 0) phase = static_cast<uint8_t>(phase + 2);
  row = PauliString(row.num_qubits(), x, z, phase);
}

}  // namespace

StabilizerTableau StabilizerTableau::zero_state(int n) {
  StabilizerTableau t;
  t.n_ = n;
  t.stab_.reserve(n);
  t.destab_.reserve(n);
  for (int q = 0; q < n; ++q) {
    t.stab_.push_back(PauliString::single(n, q, 'Z'));
    t.destab_.push_back(PauliString::single(n, q, 'X'));
  }
  return t;
}

StabilizerTableau StabilizerTableau::product_state(std::span<const SingleQubitState> states) {
  int n = static_cast<int>(states.size());
  StabilizerTableau t = zero_state(n);
  for (int q = 0; q < n; ++q) {
    switch (states[q]) {
      case SingleQubitState::Zero:
        break;
      case SingleQubitState::One:
        t.apply(Gate::X, std::array{q});
        break;
      case SingleQubitState::Plus:
        t.apply(Gate::H, std::array{q});
        break;
      case SingleQubitState::Minus:
        t.apply(Gate::X, std::array{q});
        t.apply(Gate::H, std::array{q});
        break;
      case SingleQubitState::PlusI:
        t.apply(Gate::H, std::array{q});
        t.apply(Gate::S, std::array{q});
        break;
      case SingleQubitState::MinusI:
        t.apply(Gate::H, std::array{q});
        t.apply(Gate::Sdg, std::array{q});
        break;
    }
  }
  return t;
}

StabilizerTableau StabilizerTableau::from_generators(const std::vector<PauliString>& stabilizers) {
  int n = static_cast<int>(stabilizers.size());
  if (n == 0 || n > 32) throw std::invalid_argument("bad generator count");
  for (const auto& s : stabilizers) {
    if (s.num_qubits() != n) throw std::invalid_argument("generator width mismatch");
    if (!s.is_hermitian()) throw std::invalid_argument("generator must be Hermitian");
    for (const auto& other : stabilizers) {
      if (!s.commutes_with(other)) throw std::invalid_argument("generators must commute");
    }
  }

  // Destabilizer d_k solves <d_k, s_j> = delta_jk and <d_k, d_j> = 0 (j < k)
  // over GF(2), with the unknown as the 2n-bit vector (x | z).
  auto functional_coeffs = [n](const PauliString& a) -> uint64_t {
    // <a, v> = a.x * v.z + a.z * v.x, so the coefficient row against
    // (v.x | v.z) is (a.z | a.x << n).
    return a.z_mask() | (a.x_mask() << n);
  };

  StabilizerTableau t;
  t.n_ = n;
  t.stab_ = stabilizers;
  t.destab_.reserve(n);
  for (int k = 0; k < n; ++k) {
    std::vector<uint64_t> rows;
    std::vector<int> rhs;
    for (int j = 0; j < n; ++j) {
      rows.push_back(functional_coeffs(stabilizers[j]));
      rhs.push_back(j == k ? 1 : 0);
    }
    for (int j = 0; j < k; ++j) {
      rows.push_back(functional_coeffs(t.destab_[j]));
      rhs.push_back(0);
    }
    // Gaussian elimination over GF(2).
    int cols = 2 * n;
    size_t rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && rank < rows.size(); ++col) {
      size_t sel = rank;
      while (sel < rows.size() && !((rows[sel] >> col) & 1)) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[rank], rows[sel]);
      std::swap(rhs[rank], rhs[sel]);
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r != rank && ((rows[r] >> col) & 1)) {
          rows[r] ^= rows[rank];
          rhs[r] ^= rhs[rank];
        }
      }
      pivot_col.push_back(col);
      ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r) {
      if (rhs[r]) throw std::invalid_argument("generators are dependent");
    }
    uint64_t solution = 0;
    for (size_t r = 0; r < rank; ++r) {
      if (rhs[r]) solution |= uint64_t{1} << pivot_col[r];
    }
    uint64_t mask = n < 64 ? (uint64_t{1} << n) - 1 : ~uint64_t{0};
    t.destab_.push_back(PauliString(n, solution & mask, (solution >> n) & mask, 0));
  }
  return t;
}

void StabilizerTableau::apply(Gate g, std::span<const int> qubits) {
  if (static_cast<int>(qubits.size()) != gate_arity(g)) {
    throw std::invalid_argument("gate arity mismatch");
  }
  for (size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n_) throw std::invalid_argument("qubit index out of range");
    for (size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) throw std::invalid_argument("repeated qubit index");
    }
  }
  const CliffordAction& action = clifford_action(g);
  for (auto& row : stab_) conjugate_row(row, action, qubits);
  for (auto& row : destab_) conjugate_row(row, action, qubits);
}

void StabilizerTableau::apply(std::span<const CliffordOp> ops) {
  for (const auto& op : ops) apply(op);
}

double StabilizerTableau::postselect_zero(int qubit) {
  if (qubit < 0 || qubit >= n_) throw std::invalid_argument("qubit index out of range");
  PauliString zq = PauliString::single(n_, qubit, 'Z');
  uint64_t bit = uint64_t{1} << qubit;

  int p = -1;
  for (int k = 0; k < n_; ++k) {
    if (stab_[k].x_mask() & bit) {
      p = k;
      break;
    }
  }
  if (p >= 0) {
    // Random outcome; project onto +Z_q.
    PauliString old = stab_[p];
    for (int k = 0; k < n_; ++k) {
      if (k != p && (stab_[k].x_mask() & bit)) stab_[k] = stab_[k] * old;
      if (k != p && (destab_[k].x_mask() & bit)) destab_[k] = destab_[k] * old;
    }
    destab_[p] = old;
    stab_[p] = zq;
    return 0.5;
  }
  // Deterministic outcome: express Z_q over the stabilizer generators.
  PauliString prod = PauliString::identity(n_);
  for (int k = 0; k < n_; ++k) {
    if (symplectic(destab_[k], zq)) prod = prod * stab_[k];
  }
  if (prod.x_mask() != zq.x_mask() || prod.z_mask() != zq.z_mask()) {
    throw std::logic_error("tableau invariant violated in postselect");
  }
  return prod.sign() > 0 ? 1.0 : 0.0;
}

int StabilizerTableau::expectation(const PauliString& a) const {
  if (a.num_qubits() != n_) throw std::invalid_argument("Pauli size mismatch");
  if (!a.is_hermitian()) throw std::invalid_argument("observable must be Hermitian");
  for (const auto& s : stab_) {
    if (symplectic(s, a)) return 0;
  }
  PauliString prod = PauliString::identity(n_);
  for (int k = 0; k < n_; ++k) {
    if (symplectic(destab_[k], a)) prod = prod * stab_[k];
  }
  if (prod.x_mask() != a.x_mask() || prod.z_mask() != a.z_mask()) return 0;
  return prod.sign() * a.sign();
}

StabilizerTableau StabilizerTableau::tensor(const StabilizerTableau& rhs) const {
  StabilizerTableau out;
  out.n_ = n_ + rhs.n_;
  out.stab_.reserve(out.n_);
  out.destab_.reserve(out.n_);
  auto widen_low = [&](const PauliString& p) {
    return PauliString(out.n_, p.x_mask(), p.z_mask(), p.phase_exp());
  };
  auto widen_high = [&](const PauliString& p) {
    return PauliString(out.n_, p.x_mask() << n_, p.z_mask() << n_, p.phase_exp());
  };
  for (const auto& s : stab_) out.stab_.push_back(widen_low(s));
  for (const auto& s : rhs.stab_) out.stab_.push_back(widen_high(s));
  for (const auto& d : destab_) out.destab_.push_back(widen_low(d));
  for (const auto& d : rhs.destab_) out.destab_.push_back(widen_high(d));
  return out;
}

PauliVector StabilizerTableau::pauli_vector() const {
  PauliVector out(n_);
  std::vector<PauliString> elem(size_t{1} << n_, PauliString::identity(n_));
  out[0] = 1.0;
  for (uint32_t subset = 1; subset < elem.size(); ++subset) {
    int low = std::countr_zero(subset);
    elem[subset] = elem[subset & (subset - 1)] * stab_[low];
    out[elem[subset].label()] = elem[subset].sign();
  }
  return out;
}

double evaluate_gadget_expectation(std::span<const CliffordOp> u_cl,
                                   const StabilizerTableau& sigma, int n_data,
                                   int t_ancilla, const PauliString& a) {
  if (sigma.num_qubits() != t_ancilla) throw std::invalid_argument("resource width mismatch");
  if (a.num_qubits() != n_data) throw std::invalid_argument("observable width mismatch");
  int n = n_data + t_ancilla;
  StabilizerTableau state = StabilizerTableau::zero_state(n_data).tensor(sigma);
  state.apply(u_cl);
  double weight = 1.0;
  for (int q = n_data; q < n; ++q) {
    double prob = state.postselect_zero(q);
    if (prob == 0.0) return 0.0;
    weight *= prob;
  }
  PauliString wide(n, a.x_mask(), a.z_mask(), a.phase_exp());
  double scale = static_cast<double>(uint64_t{1} << t_ancilla);
  return scale * weight * state.expectation(wide);
}

}  // namespace qpsim
