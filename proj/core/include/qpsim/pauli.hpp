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

#ifndef QPSIM_PAULI_HPP
#define QPSIM_PAULI_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qpsim {

/// Index of a Pauli operator in the 4^n product basis.
///
/// The label packs one base-4 digit per qubit, qubit 0 in the least
/// significant digit, with the letter order I=0, X=1, Y=2, Z=3.
using PauliLabel = uint32_t;

/// A signed n-qubit Pauli operator.
///
/// The operator is i^phase_exp * L_0 ⊗ L_1 ⊗ ... ⊗ L_{n-1}, where letter
/// L_q is read from bit q of the X/Z masks: X-bit only = X, Z-bit only = Z,
/// both = Y. Multiplication tracks the i^k phase exactly, so products and
/// conjugations are never off by a sign.
class PauliString {
 public:
  PauliString() = default;
  PauliString(int n, uint64_t x_mask, uint64_t z_mask, uint8_t phase_exp = 0);

  static PauliString identity(int n);
  /// Single-letter Pauli ('I', 'X', 'Y' or 'Z') acting on `qubit`.
  static PauliString single(int n, int qubit, char letter);
  /// Parses e.g. "+XIZ", "-iYY", "ZZ". Qubit 0 is the leftmost letter.
  static PauliString parse(std::string_view text);
  static PauliString from_label(int n, PauliLabel label, uint8_t phase_exp = 0);

  int num_qubits() const { return n_; }
  uint64_t x_mask() const { return x_; }
  uint64_t z_mask() const { return z_; }
  uint8_t phase_exp() const { return phase_; }

  /// True when the operator is Hermitian (phase is +1 or -1).
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  /// +1 or -1; only valid for Hermitian operators.
  int sign() const;

  /// Letter digit (0..3 = I,X,Y,Z) on qubit q.
  int letter(int q) const;
  /// Unsigned part of the operator as a base-4 label.
  PauliLabel label() const;
  bool is_identity_letters() const { return x_ == 0 && z_ == 0; }

  /// Weight-preserving helpers.
  PauliString negated() const;
  PauliString with_phase(uint8_t phase_exp) const;

  bool commutes_with(const PauliString& other) const;

  std::string str() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  int n_ = 0;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
  uint8_t phase_ = 0;  // operator = i^phase_ * letters
};

/// Exact signed product of two Pauli strings.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// True iff pq = qp (symplectic inner product of the masks vanishes).
bool commutes(const PauliString& a, const PauliString& b);

/// Dense 2^n x 2^n matrix of the operator, row-major. Qubit 0 is the most
/// significant bit of the row/column index.
std::vector<std::complex<double>> pauli_dense_matrix(const PauliString& p);

/// A Hermitian operator expanded over the 4^n Pauli basis.
///
/// coeffs[label] = Tr(rho * P_label), so a density operator always has
/// coefficient 1 on the identity and rho = 2^-n sum_P c_P P.
class PauliVector {
 public:
  PauliVector() = default;
  explicit PauliVector(int n);
  PauliVector(int n, std::vector<double> coeffs);

  int num_qubits() const { return n_; }
  size_t size() const { return coeffs_.size(); }
  double operator[](PauliLabel label) const { return coeffs_[label]; }
  double& operator[](PauliLabel label) { return coeffs_[label]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Tensor product; `rhs` occupies the qubits after this vector's.
  PauliVector tensor(const PauliVector& rhs) const;
  PauliVector tensor_power(int copies) const;

  /// coeffs[P] = <psi|P|psi> for a normalized amplitude vector of length 2^n
  /// (qubit 0 = most significant index bit). Throws if the norm is off by
  /// more than 1e-10.
  static PauliVector of_pure_state(std::span<const std::complex<double>> amplitudes);

  /// coeffs[P] = Tr(rho P) for a row-major 2^n x 2^n density matrix.
  static PauliVector of_density(std::span<const std::complex<double>> rho, int n);

  /// Reconstructs the row-major density matrix 2^-n sum_P c_P P.
  std::vector<std::complex<double>> to_density() const;

  friend bool operator==(const PauliVector& a, const PauliVector& b) = default;

 private:
  int n_ = 0;
  std::vector<double> coeffs_;
};

/// Letter digit of `label` on qubit q.
inline int label_digit(PauliLabel label, int q) { return (label >> (2 * q)) & 3; }

/// Builds a label from per-qubit digits.
PauliLabel label_from_digits(std::span<const int> digits);

}  // namespace qpsim

#endif  // QPSIM_PAULI_HPP
