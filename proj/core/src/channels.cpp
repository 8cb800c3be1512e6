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

#include "qpsim/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpsim {

namespace {

void check_rate(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("noise rate out of range [0, 1]");
}

}  // namespace

PauliChannel PauliChannel::depolarizing1(double p) {
  check_rate(p);
  PauliChannel c;
  c.n = 1;
  c.terms = {{1.0 - 0.75 * p, PauliString::parse("+I")},
             {0.25 * p, PauliString::parse("+X")},
             {0.25 * p, PauliString::parse("+Y")},
             {0.25 * p, PauliString::parse("+Z")}};
  return c;
}

PauliChannel PauliChannel::depolarizing2(double p) {
  check_rate(p);
  PauliChannel c;
  c.n = 2;
  c.terms.reserve(16);
  c.terms.emplace_back(1.0 - 15.0 * p / 16.0, PauliString::identity(2));
  for (PauliLabel l = 1; l < 16; ++l) {
    c.terms.emplace_back(p / 16.0, PauliString::from_label(2, l));
  }
  return c;
}

PauliChannel PauliChannel::dephasing(double p) {
  check_rate(p);
  PauliChannel c;
  c.n = 1;
  c.terms = {{1.0 - p, PauliString::parse("+I")}, {p, PauliString::parse("+Z")}};
  return c;
}

PauliChannel PauliChannel::pauli_rates(double px, double py, double pz) {
  check_rate(px);
  check_rate(py);
  check_rate(pz);
  PauliChannel c;
  c.n = 1;
  c.terms = {{1.0 - 0.25 * (px + py + pz), PauliString::parse("+I")},
             {0.25 * px, PauliString::parse("+X")},
             {0.25 * py, PauliString::parse("+Y")},
             {0.25 * pz, PauliString::parse("+Z")}};
  return c;
}

void PauliChannel::validate() const {
  double total = 0.0;
  for (const auto& [prob, pauli] : terms) {
    if (prob < -1e-12 || prob > 1.0 + 1e-12) throw std::invalid_argument("bad probability");
    if (pauli.num_qubits() != n) throw std::invalid_argument("Pauli width mismatch");
    total += prob;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("channel probabilities must sum to 1");
  }
}

Ptm::Ptm(int n, Eigen::MatrixXd matrix) : n_(n), m_(std::move(matrix)) {
  Eigen::Index dim = Eigen::Index{1} << (2 * n);
  if (m_.rows() != dim || m_.cols() != dim) {
    throw std::invalid_argument("PTM must be 4^n x 4^n");
  }
}

Ptm Ptm::identity(int n) {
  Eigen::Index dim = Eigen::Index{1} << (2 * n);
  return Ptm(n, Eigen::MatrixXd::Identity(dim, dim));
}

Ptm Ptm::of_gate(Gate g, double theta) {
  int arity = gate_arity(g);
  Eigen::Index dim = Eigen::Index{1} << (2 * arity);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  if (is_clifford(g)) {
    const CliffordAction& action = clifford_action(g);
    for (Eigen::Index j = 0; j < dim; ++j) {
      m(action.image[j], j) = action.sign[j];
    }
    return Ptm(arity, std::move(m));
  }
  // Diagonal z-rotations: X -> cos X + sin Y, Y -> -sin X + cos Y.
  double angle = g == Gate::T ? std::numbers::pi / 4.0 : theta;
  double c = std::cos(angle), s = std::sin(angle);
  m(0, 0) = 1.0;
  m(1, 1) = c;
  m(2, 1) = s;
  m(1, 2) = -s;
  m(2, 2) = c;
  m(3, 3) = 1.0;
  return Ptm(1, std::move(m));
}

Ptm Ptm::of_pauli_channel(const PauliChannel& channel) {
  channel.validate();
  Eigen::Index dim = Eigen::Index{1} << (2 * channel.n);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  for (PauliLabel l = 0; l < static_cast<PauliLabel>(dim); ++l) {
    PauliString p = PauliString::from_label(channel.n, l);
    double factor = 0.0;
    for (const auto& [prob, kraus] : channel.terms) {
      factor += kraus.commutes_with(p) ? prob : -prob;
    }
    diag[l] = factor;
  }
  return Ptm(channel.n, diag.asDiagonal());
}

Ptm Ptm::dephasing(double p) { return of_pauli_channel(PauliChannel::dephasing(p)); }
Ptm Ptm::depo1(double p) { return of_pauli_channel(PauliChannel::depolarizing1(p)); }
Ptm Ptm::depo2(double p) { return of_pauli_channel(PauliChannel::depolarizing2(p)); }
Ptm Ptm::pauli_noise(double px, double py, double pz) {
  return of_pauli_channel(PauliChannel::pauli_rates(px, py, pz));
}

Ptm Ptm::after(const Ptm& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("PTM size mismatch");
  return Ptm(n_, m_ * rhs.m_);
}

Ptm Ptm::tensor(const Ptm& rhs) const {
  int n = n_ + rhs.n_;
  Eigen::Index da = m_.rows(), db = rhs.m_.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(da * db, da * db);
  // This vector's qubits take the low label digits.
  for (Eigen::Index rb = 0; rb < db; ++rb)
    for (Eigen::Index cb = 0; cb < db; ++cb) {
      if (rhs.m_(rb, cb) == 0.0) continue;
      out.block(rb * da, cb * da, da, da) = rhs.m_(rb, cb) * m_;
    }
  return Ptm(n, std::move(out));
}

PauliVector Ptm::apply(const PauliVector& v) const {
  if (v.num_qubits() != n_) throw std::invalid_argument("PTM size mismatch");
  Eigen::Map<const Eigen::VectorXd> in(v.coeffs().data(), m_.cols());
  Eigen::VectorXd out = m_ * in;
  return PauliVector(n_, std::vector<double>(out.data(), out.data() + out.size()));
}

bool Ptm::is_diagonal(double tol) const {
  for (Eigen::Index r = 0; r < m_.rows(); ++r)
    for (Eigen::Index c = 0; c < m_.cols(); ++c)
      if (r != c && std::abs(m_(r, c)) > tol) return false;
  return true;
}

bool Ptm::is_signed_permutation(double tol) const {
  for (Eigen::Index r = 0; r < m_.rows(); ++r) {
    int hits = 0;
    for (Eigen::Index c = 0; c < m_.cols(); ++c) {
      double a = std::abs(m_(r, c));
      if (a > tol && std::abs(a - 1.0) > tol) return false;
      if (a > tol) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

double stabilizer_norm(const PauliVector& a) {
  double sum = 0.0;
  for (double c : a.coeffs()) sum += std::abs(c);
  return sum / static_cast<double>(size_t{1} << a.num_qubits());
}

double channel_stabilizer_norm(const Ptm& r) {
  double best = 0.0;
  for (Eigen::Index row = 0; row < r.matrix().rows(); ++row) {
    best = std::max(best, r.row_l1(static_cast<int>(row)));
  }
  return best;
}

Ptm unit_cell_ptm(int kind, double p1, double p2) {
  if (kind != 2 && kind != 3) throw std::invalid_argument("unit cell kind must be 2 or 3");
  check_rate(p1);
  check_rate(p2);
  Ptm t = Ptm::of_gate(Gate::T);
  Ptm id = Ptm::identity(1);
  Ptm d1 = Ptm::depo1(p1);
  Ptm second = kind == 3 ? t : id;
  // (R_T x R_second)(R_depo1 x I)(I x R_depo1) R_depo2, the product order the
  // closed-form norms refer to.
  Ptm product = t.tensor(second)
                    .after(d1.tensor(id))
                    .after(id.tensor(d1))
                    .after(Ptm::depo2(p2));
  return product;
}

UnitCellNorms unit_cell_norms(double p1, double p2) {
  UnitCellNorms norms;
  norms.d2 = channel_stabilizer_norm(unit_cell_ptm(2, p1, p2));
  norms.d3 = channel_stabilizer_norm(unit_cell_ptm(3, p1, p2));
  return norms;
}

UnitCellNorms unit_cell_norms_closed_form(double p1, double p2) {
  double cross = std::numbers::sqrt2 * (p1 - 1.0) * (p2 - 1.0);
  UnitCellNorms norms;
  norms.d2 = std::max(1.0, cross);
  norms.d3 = std::max({1.0, cross, -2.0 * (p1 - 1.0) * (p1 - 1.0) * (p2 - 1.0)});
  return norms;
}

double pauli_channel_t_norm(double px, double py, double pz) {
  check_rate(px);
  check_rate(py);
  check_rate(pz);
  return std::max({1.0, std::numbers::sqrt2 * (1.0 - 0.5 * (px + pz)),
                   std::numbers::sqrt2 * (1.0 - 0.5 * (py + pz))});
}

}  // namespace qpsim
