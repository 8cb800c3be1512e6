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

#include "qpsim/gadgets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpsim {

namespace {

using cd = std::complex<double>;

PauliVector plus_state_vector() {
  PauliVector v(1);
  v[0] = 1.0;
  v[1] = 1.0;
  return v;
}

}  // namespace

ResourceState ResourceState::tensor(const ResourceState& rhs) const {
  ResourceState out;
  out.vector = vector.tensor(rhs.vector);
  out.t_qubits = t_qubits;
  for (int q : rhs.t_qubits) out.t_qubits.push_back(q + num_qubits());
  out.name = name + "*" + rhs.name;
  return out;
}

void DiagonalNoise::validate() const {
  double total = 0.0;
  for (const auto& [prob, pauli] : terms) {
    if (prob < -1e-12 || prob > 1.0 + 1e-12) throw std::invalid_argument("bad probability");
    if (pauli.num_qubits() != n) throw std::invalid_argument("Pauli width mismatch");
    if (pauli.x_mask() != 0) throw std::invalid_argument("diagonal noise must be Z-type");
    total += prob;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("noise probabilities must sum to 1");
  }
}

PauliVector DiagonalNoise::apply(const PauliVector& v) const {
  if (v.num_qubits() != n) throw std::invalid_argument("register width mismatch");
  PauliVector out(n);
  for (PauliLabel l = 0; l < v.size(); ++l) {
    if (v[l] == 0.0) continue;
    PauliString p = PauliString::from_label(n, l);
    double factor = 0.0;
    for (const auto& [prob, z] : terms) {
      factor += z.commutes_with(p) ? prob : -prob;
    }
    out[l] = factor * v[l];
  }
  return out;
}

DiagonalNoise DiagonalNoise::embed(int n_total, std::span<const int> qubits) const {
  if (static_cast<int>(qubits.size()) != n) throw std::invalid_argument("qubit count mismatch");
  DiagonalNoise out;
  out.n = n_total;
  out.terms.reserve(terms.size());
  for (const auto& [prob, z] : terms) {
    uint64_t zmask = 0;
    for (int q = 0; q < n; ++q) {
      if ((z.z_mask() >> q) & 1) zmask |= uint64_t{1} << qubits[q];
    }
    out.terms.emplace_back(prob, PauliString(n_total, 0, zmask, z.phase_exp()));
  }
  return out;
}

DiagonalNoise DiagonalNoise::after(const DiagonalNoise& rhs) const {
  if (n != rhs.n) throw std::invalid_argument("register width mismatch");
  DiagonalNoise out;
  out.n = n;
  for (const auto& [pa, za] : terms) {
    for (const auto& [pb, zb] : rhs.terms) {
      out.terms.emplace_back(pa * pb, za * zb);
    }
  }
  return out;
}

ResourceState teleport_diagonal_gate(double theta) {
  ResourceState out;
  out.vector = PauliVector(1);
  out.vector[0] = 1.0;
  out.vector[1] = std::cos(theta);
  out.vector[2] = std::sin(theta);
  out.t_qubits = {0};
  out.name = "rotation(" + std::to_string(theta) + ")";
  return out;
}

ResourceState push_dephasing(double theta, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("dephasing rate out of range");
  ResourceState out = teleport_diagonal_gate(theta);
  out.vector[1] *= 1.0 - 2.0 * p;
  out.vector[2] *= 1.0 - 2.0 * p;
  out.name = "dephased-" + out.name;
  return out;
}

ResourceState NoiseTeleportResult::noisy() const {
  ResourceState out;
  out.vector = noise.apply(resource.vector);
  out.t_qubits = resource.t_qubits;
  out.name = "noisy-" + resource.name;
  return out;
}

NoiseTeleportResult noise_teleport(double theta, const PauliChannel& noise) {
  if (noise.n != 1) throw std::invalid_argument("noise teleportation expects one-qubit noise");
  noise.validate();

  // CZ(|U(theta)> x |+>) = (|00> + |01> + e^{i theta}|10> - e^{i theta}|11>)/2.
  cd phase = std::exp(cd(0.0, theta));
  std::vector<cd> amps = {0.5, 0.5, 0.5 * phase, -0.5 * phase};
  NoiseTeleportResult out;
  out.resource.vector = PauliVector::of_pure_state(amps);
  out.resource.t_qubits = {0};
  out.resource.name = "gadget(" + std::to_string(theta) + ")";

  // Errors after the gate reappear as Z-type noise on the gadget qubits:
  // Z on the rotation ancilla, X on the Hadamard ancilla, Y on both.
  out.noise.n = 2;
  for (const auto& [prob, kraus] : noise.terms) {
    switch (kraus.label()) {
      case 0: out.noise.terms.emplace_back(prob, PauliString::parse("+II")); break;
      case 1: out.noise.terms.emplace_back(prob, PauliString::parse("+IZ")); break;
      case 2: out.noise.terms.emplace_back(prob, PauliString::parse("+ZZ")); break;
      case 3: out.noise.terms.emplace_back(prob, PauliString::parse("+ZI")); break;
      default: throw std::invalid_argument("noise term is not a one-qubit Pauli");
    }
  }
  return out;
}

Ptm StochasticUnitaryChannel::ptm() const {
  Eigen::Index dim = Eigen::Index{1} << (2 * n);
  size_t mat_dim = size_t{1} << n;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [prob, u] : terms) {
    if (u.size() != mat_dim * mat_dim) throw std::invalid_argument("Kraus dimension mismatch");
    for (PauliLabel j = 0; j < static_cast<PauliLabel>(dim); ++j) {
      // U P_j U^dag expanded over the Pauli basis.
      std::vector<cd> pm = pauli_dense_matrix(PauliString::from_label(n, j));
      std::vector<cd> tmp(mat_dim * mat_dim, 0.0), conj(mat_dim * mat_dim, 0.0);
      for (size_t r = 0; r < mat_dim; ++r)
        for (size_t k = 0; k < mat_dim; ++k) {
          if (u[r * mat_dim + k] == cd(0.0)) continue;
          for (size_t c = 0; c < mat_dim; ++c) tmp[r * mat_dim + c] += u[r * mat_dim + k] * pm[k * mat_dim + c];
        }
      for (size_t r = 0; r < mat_dim; ++r)
        for (size_t k = 0; k < mat_dim; ++k) {
          if (tmp[r * mat_dim + k] == cd(0.0)) continue;
          for (size_t c = 0; c < mat_dim; ++c)
            conj[r * mat_dim + c] += tmp[r * mat_dim + k] * std::conj(u[c * mat_dim + k]);
        }
      for (PauliLabel i = 0; i < static_cast<PauliLabel>(dim); ++i) {
        std::vector<cd> qm = pauli_dense_matrix(PauliString::from_label(n, i));
        cd overlap = 0.0;
        for (size_t r = 0; r < mat_dim; ++r)
          for (size_t c = 0; c < mat_dim; ++c) overlap += std::conj(qm[r * mat_dim + c]) * conj[r * mat_dim + c];
        out(i, j) += prob * overlap.real() / static_cast<double>(mat_dim);
      }
    }
  }
  return Ptm(n, std::move(out));
}

StochasticUnitaryChannel noise_fuse(const PauliChannel& noise, Gate u, double theta) {
  noise.validate();
  int arity = gate_arity(u);
  if (noise.n != arity) throw std::invalid_argument("noise width must match the gate");
  size_t dim = size_t{1} << arity;
  std::vector<cd> um = gate_matrix(u, theta);

  StochasticUnitaryChannel out;
  out.n = noise.n;
  for (const auto& [prob, kraus] : noise.terms) {
    std::vector<cd> em = pauli_dense_matrix(kraus);
    // U^dag E U
    std::vector<cd> tmp(dim * dim, 0.0), pulled(dim * dim, 0.0);
    for (size_t r = 0; r < dim; ++r)
      for (size_t k = 0; k < dim; ++k) {
        cd ud = std::conj(um[k * dim + r]);  // (U^dag)[r][k]
        if (ud == cd(0.0)) continue;
        for (size_t c = 0; c < dim; ++c) tmp[r * dim + c] += ud * em[k * dim + c];
      }
    for (size_t r = 0; r < dim; ++r)
      for (size_t k = 0; k < dim; ++k) {
        if (tmp[r * dim + k] == cd(0.0)) continue;
        for (size_t c = 0; c < dim; ++c) pulled[r * dim + c] += tmp[r * dim + k] * um[k * dim + c];
      }
    out.terms.emplace_back(prob, std::move(pulled));
  }
  return out;
}

PauliChannel noise_fuse_clifford(const PauliChannel& noise, Gate u, std::span<const int> qubits) {
  noise.validate();
  if (!is_clifford(u)) throw std::invalid_argument("expected a Clifford gate");
  if (static_cast<int>(qubits.size()) != gate_arity(u)) {
    throw std::invalid_argument("gate arity mismatch");
  }
  // U^dag P U is conjugation by the inverse gate; invert the action table.
  const CliffordAction& fwd = clifford_action(u);
  int labels = gate_arity(u) == 1 ? 4 : 16;
  std::array<uint8_t, 16> inv_image{};
  std::array<int8_t, 16> inv_sign{};
  for (int l = 0; l < labels; ++l) {
    inv_image[fwd.image[l]] = static_cast<uint8_t>(l);
    inv_sign[fwd.image[l]] = fwd.sign[l];
  }
  PauliChannel out;
  out.n = noise.n;
  out.terms.reserve(noise.terms.size());
  for (const auto& [prob, kraus] : noise.terms) {
    int local = 0;
    for (size_t k = 0; k < qubits.size(); ++k) local |= kraus.letter(qubits[k]) << (2 * k);
    int image = inv_image[local];
    uint64_t x = kraus.x_mask(), z = kraus.z_mask();
    for (size_t k = 0; k < qubits.size(); ++k) {
      uint64_t bit = uint64_t{1} << qubits[k];
      int d = (image >> (2 * k)) & 3;
      x = (d == 1 || d == 2) ? (x | bit) : (x & ~bit);
      z = (d == 2 || d == 3) ? (z | bit) : (z & ~bit);
    }
    // The sign of the conjugated label does not matter for [E] rho [E]^dag.
    (void)inv_sign;
    out.terms.emplace_back(prob, PauliString(kraus.num_qubits(), x, z, 0));
  }
  return out;
}

ResourceState fused_t_resource(double p, int fold) {
  if (fold != 1 && fold != 2) throw std::invalid_argument("fold must be 1 or 2");
  NoiseTeleportResult gadget = noise_teleport(std::numbers::pi / 4.0, PauliChannel::depolarizing1(p));
  DiagonalNoise noise = gadget.noise;
  if (fold == 2) noise = noise.after(gadget.noise);
  ResourceState out;
  out.vector = noise.apply(gadget.resource.vector);
  out.t_qubits = {0};
  out.name = "fused-t(p=" + std::to_string(p) + ",fold=" + std::to_string(fold) + ")";
  return out;
}

DiagonalNoise teleported_depo1(double p, int n_total, int z1_qubit, int z2_qubit) {
  NoiseTeleportResult gadget = noise_teleport(0.0, PauliChannel::depolarizing1(p));
  return gadget.noise.embed(n_total, std::array{z1_qubit, z2_qubit});
}

DiagonalNoise unit_cell_e2(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("noise rate out of range");
  // (A, B) with A, B over {II, Z1, Z2, Z1Z2} on the two gadget pairs; all
  // fifteen nonidentity combinations at p/16.
  static const char* kBlock[4] = {"II", "ZI", "IZ", "ZZ"};
  DiagonalNoise out;
  out.n = 4;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      double prob = (a == 0 && b == 0) ? 1.0 - 15.0 * p / 16.0 : p / 16.0;
      out.terms.emplace_back(prob,
                             PauliString::parse("+" + std::string(kBlock[a]) + kBlock[b]));
    }
  }
  return out;
}

ResourceState unit_cell_resource(int kind, double p) {
  if (kind != 2 && kind != 3) throw std::invalid_argument("unit cell kind must be 2 or 3");
  PauliVector t_vec = teleport_diagonal_gate(std::numbers::pi / 4.0).vector;
  PauliVector plus = plus_state_vector();
  PauliVector second = kind == 3 ? t_vec : plus;
  PauliVector clean = t_vec.tensor(plus).tensor(second).tensor(plus);

  DiagonalNoise e1_first = teleported_depo1(p, 4, 0, 1);
  DiagonalNoise e1_second = teleported_depo1(p, 4, 2, 3);
  DiagonalNoise total = unit_cell_e2(p).after(e1_first).after(e1_second);

  ResourceState out;
  out.vector = total.apply(clean);
  out.t_qubits = kind == 3 ? std::vector<int>{0, 2} : std::vector<int>{0};
  out.name = "unit" + std::to_string(kind) + "(p=" + std::to_string(p) + ")";
  return out;
}

}  // namespace qpsim
