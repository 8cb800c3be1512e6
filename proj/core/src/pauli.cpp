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

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qpsim {

namespace {

constexpr int kMaxQubits = 15;  // labels fit a uint32_t

void check_qubit_count(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
  }
}

// i-exponent of the product of two letters: sigma_a sigma_b = i^eps sigma_(a^b).
// Letters are digit-encoded I=0, X=1, Y=2, Z=3; the cycle X->Y->Z->X picks up
// +i, the reverse -i.
constexpr uint8_t kMulPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

int digit_of_bits(bool x, bool z) { return x ? (z ? 2 : 1) : (z ? 3 : 0); }

}  // namespace

PauliString::PauliString(int n, uint64_t x_mask, uint64_t z_mask, uint8_t phase_exp)
    : n_(n), x_(x_mask), z_(z_mask), phase_(phase_exp & 3) {
  check_qubit_count(n);
  if (n < 64 && ((x_ | z_) >> n) != 0) {
    throw std::invalid_argument("Pauli mask has bits beyond the qubit count");
  }
}

PauliString PauliString::identity(int n) { return PauliString(n, 0, 0, 0); }

PauliString PauliString::single(int n, int qubit, char letter) {
  if (qubit < 0 || qubit >= n) {
    throw std::invalid_argument("qubit index out of range");
  }
  uint64_t bit = uint64_t{1} << qubit;
  switch (letter) {
    case 'I': return PauliString(n, 0, 0);
    case 'X': return PauliString(n, bit, 0);
    case 'Y': return PauliString(n, bit, bit);
    case 'Z': return PauliString(n, 0, bit);
    default: throw std::invalid_argument(std::string("unknown Pauli letter: ") + letter);
  }
}

PauliString PauliString::parse(std::string_view text) {
  size_t pos = 0;
  uint8_t phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = (phase + 1) & 3;
    ++pos;
  }
  std::string_view letters = text.substr(pos);
  if (letters.empty()) {
    throw std::invalid_argument("empty Pauli string");
  }
  int n = static_cast<int>(letters.size());
  check_qubit_count(n);
  uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    uint64_t bit = uint64_t{1} << q;
    switch (letters[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw std::invalid_argument("unknown Pauli letter in \"" + std::string(text) + "\"");
    }
  }
  return PauliString(n, x, z, phase);
}

PauliString PauliString::from_label(int n, PauliLabel label, uint8_t phase_exp) {
  check_qubit_count(n);
  uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    int d = (label >> (2 * q)) & 3;
    if (d == 1 || d == 2) x |= uint64_t{1} << q;
    if (d == 2 || d == 3) z |= uint64_t{1} << q;
  }
  return PauliString(n, x, z, phase_exp);
}

int PauliString::sign() const {
  if (!is_hermitian()) {
    throw std::logic_error("sign() requires a Hermitian Pauli");
  }
  return phase_ == 0 ? 1 : -1;
}

int PauliString::letter(int q) const {
  return digit_of_bits((x_ >> q) & 1, (z_ >> q) & 1);
}

PauliLabel PauliString::label() const {
  PauliLabel out = 0;
  for (int q = 0; q < n_; ++q) {
    out |= static_cast<PauliLabel>(letter(q)) << (2 * q);
  }
  return out;
}

PauliString PauliString::negated() const {
  return PauliString(n_, x_, z_, static_cast<uint8_t>(phase_ + 2));
}

PauliString PauliString::with_phase(uint8_t phase_exp) const {
  return PauliString(n_, x_, z_, phase_exp);
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("Pauli size mismatch");
  }
  uint64_t cross = (x_ & other.z_) ^ (z_ & other.x_);
  return (std::popcount(cross) & 1) == 0;
}

std::string PauliString::str() const {
  std::string out;
  switch (phase_) {
    case 0: out = "+"; break;
    case 1: out = "+i"; break;
    case 2: out = "-"; break;
    case 3: out = "-i"; break;
  }
  for (int q = 0; q < n_; ++q) {
    out += "IXYZ"[letter(q)];
  }
  return out;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) {
    throw std::invalid_argument("Pauli size mismatch");
  }
  uint8_t phase = a.phase_ + b.phase_;
  uint64_t overlap = (a.x_ | a.z_) & (b.x_ | b.z_);
  while (overlap != 0) {
    int q = std::countr_zero(overlap);
    overlap &= overlap - 1;
    phase += kMulPhase[a.letter(q)][b.letter(q)];
  }
  return PauliString(a.n_, a.x_ ^ b.x_, a.z_ ^ b.z_, phase);
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) { return a * b; }

bool commutes(const PauliString& a, const PauliString& b) { return a.commutes_with(b); }

std::vector<std::complex<double>> pauli_dense_matrix(const PauliString& p) {
  int n = p.num_qubits();
  size_t dim = size_t{1} << n;
  std::vector<std::complex<double>> out(dim * dim, 0.0);
  static const std::complex<double> kI(0.0, 1.0);
  std::complex<double> phase = 1.0;
  switch (p.phase_exp()) {
    case 1: phase = kI; break;
    case 2: phase = -1.0; break;
    case 3: phase = -kI; break;
  }
  // Each basis column c maps to a single row r with an i^k weight.
  for (size_t c = 0; c < dim; ++c) {
    size_t r = c;
    std::complex<double> amp = phase;
    for (int q = 0; q < n; ++q) {
      size_t bit = size_t{1} << (n - 1 - q);  // qubit 0 = most significant
      bool set = (c & bit) != 0;
      switch (p.letter(q)) {
        case 0: break;
        case 1: r ^= bit; break;
        case 2: r ^= bit; amp *= set ? -kI : kI; break;
        case 3: amp *= set ? -1.0 : 1.0; break;
      }
    }
    out[r * dim + c] += amp;
  }
  return out;
}

PauliVector::PauliVector(int n) : n_(n) {
  check_qubit_count(n);
  coeffs_.assign(size_t{1} << (2 * n), 0.0);
}

PauliVector::PauliVector(int n, std::vector<double> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_qubit_count(n);
  if (coeffs_.size() != (size_t{1} << (2 * n))) {
    throw std::invalid_argument("coefficient vector must have length 4^n");
  }
}

PauliVector PauliVector::tensor(const PauliVector& rhs) const {
  PauliVector out(n_ + rhs.n_);
  size_t lo = coeffs_.size();
  for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
    if (rhs.coeffs_[j] == 0.0) continue;
    for (size_t i = 0; i < lo; ++i) {
      out.coeffs_[j * lo + i] = coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

PauliVector PauliVector::tensor_power(int copies) const {
  if (copies < 1) {
    throw std::invalid_argument("tensor_power needs at least one copy");
  }
  PauliVector out = *this;
  for (int k = 1; k < copies; ++k) {
    out = out.tensor(*this);
  }
  return out;
}

PauliVector PauliVector::of_pure_state(std::span<const std::complex<double>> amplitudes) {
  size_t dim = amplitudes.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("amplitude vector length must be a power of two");
  }
  int n = std::countr_zero(dim);
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("amplitude vector is not normalized");
  }
  std::vector<std::complex<double>> rho(dim * dim);
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      rho[r * dim + c] = amplitudes[r] * std::conj(amplitudes[c]);
    }
  }
  return of_density(rho, n);
}

PauliVector PauliVector::of_density(std::span<const std::complex<double>> rho, int n) {
  check_qubit_count(n);
  size_t dim = size_t{1} << n;
  if (rho.size() != dim * dim) {
    throw std::invalid_argument("density matrix must be 2^n x 2^n");
  }
  // Work array indexed by (row bits << n) | column bits; each pass collapses
  // one qubit's (row bit, column bit) pair into a Pauli digit stored in the
  // same two bit positions (I=00, X=01, Y=10, Z=11 as row|column bits).
  std::vector<std::complex<double>> work(rho.begin(), rho.end());
  static const std::complex<double> kI(0.0, 1.0);
  for (int q = 0; q < n; ++q) {
    size_t cbit = size_t{1} << (n - 1 - q);
    size_t rbit = cbit << n;
    for (size_t idx = 0; idx < work.size(); ++idx) {
      if ((idx & cbit) || (idx & rbit)) continue;
      std::complex<double> v00 = work[idx];
      std::complex<double> v01 = work[idx | cbit];
      std::complex<double> v10 = work[idx | rbit];
      std::complex<double> v11 = work[idx | rbit | cbit];
      work[idx] = v00 + v11;                      // I
      work[idx | cbit] = v01 + v10;               // X
      work[idx | rbit] = kI * v01 - kI * v10;     // Y
      work[idx | rbit | cbit] = v00 - v11;        // Z
    }
  }
  PauliVector out(n);
  for (size_t idx = 0; idx < work.size(); ++idx) {
    PauliLabel label = 0;
    for (int q = 0; q < n; ++q) {
      size_t cbit = size_t{1} << (n - 1 - q);
      size_t rbit = cbit << n;
      int d = (((idx & rbit) != 0) << 1) | ((idx & cbit) != 0);
      label |= static_cast<PauliLabel>(d) << (2 * q);
    }
    out.coeffs_[label] = work[idx].real();
  }
  return out;
}

std::vector<std::complex<double>> PauliVector::to_density() const {
  size_t dim = size_t{1} << n_;
  std::vector<std::complex<double>> work(dim * dim, 0.0);
  static const std::complex<double> kI(0.0, 1.0);
  // Scatter coefficients into the bit-pair layout, then invert the per-qubit
  // transform used by of_density.
  for (PauliLabel label = 0; label < coeffs_.size(); ++label) {
    if (coeffs_[label] == 0.0) continue;
    size_t idx = 0;
    for (int q = 0; q < n_; ++q) {
      size_t cbit = size_t{1} << (n_ - 1 - q);
      size_t rbit = cbit << n_;
      int d = label_digit(label, q);
      if (d & 1) idx |= cbit;
      if (d & 2) idx |= rbit;
    }
    work[idx] = coeffs_[label];
  }
  for (int q = 0; q < n_; ++q) {
    size_t cbit = size_t{1} << (n_ - 1 - q);
    size_t rbit = cbit << n_;
    for (size_t idx = 0; idx < work.size(); ++idx) {
      if ((idx & cbit) || (idx & rbit)) continue;
      std::complex<double> ci = work[idx];
      std::complex<double> cx = work[idx | cbit];
      std::complex<double> cy = work[idx | rbit];
      std::complex<double> cz = work[idx | rbit | cbit];
      // The 1/2 per qubit accumulates to the full 2^-n normalization.
      work[idx] = 0.5 * (ci + cz);
      work[idx | cbit] = 0.5 * (cx - kI * cy);
      work[idx | rbit] = 0.5 * (cx + kI * cy);
      work[idx | rbit | cbit] = 0.5 * (ci - cz);
    }
  }
  return work;
}

PauliLabel label_from_digits(std::span<const int> digits) {
  PauliLabel out = 0;
  for (size_t q = 0; q < digits.size(); ++q) {
    out |= static_cast<PauliLabel>(digits[q] & 3) << (2 * q);
  }
  return out;
}

}  // namespace qpsim
