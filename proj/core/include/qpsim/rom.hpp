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

#ifndef QPSIM_ROM_HPP
#define QPSIM_ROM_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpsim/basis.hpp"
#include "qpsim/pauli.hpp"

namespace qpsim {

/// Target not representable over the chosen basis.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// LP engine failed to converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quasiprobability decomposition target = sum_i x_i sigma_i over a
/// stabilizer basis, with sum_i x_i = 1 and l1 = sum |x_i| minimized for the
/// basis it was solved over.
struct QuasiDecomposition {
  int n = 0;
  std::string basis_tag;
  std::vector<int32_t> state_indices;
  std::vector<double> coefficients;
  double l1 = 0.0;
  double residual = 0.0;        // max-norm reconstruction error
  double dual_objective = 0.0;  // LP certificate; equals l1 at optimality
  int64_t iterations = 0;

  /// Final LP basis, reusable to warm-start a neighboring solve.
  std::vector<int32_t> lp_basis;

  double coefficient_sum() const;
};

struct RomOptions {
  /// Warm start from a previous decomposition over the same basis.
  const std::vector<int32_t>* warm_basis = nullptr;
  /// Directory for the decomposition cache; empty disables caching.
  std::string cache_dir;
};

/// Robustness of magic over the given basis: minimizes sum |x_i| subject to
/// sum x_i sigma_i = target via an equality-constrained LP with the usual
/// positive/negative split. Throws InfeasibleError when the target has
/// support outside the basis span and SolverError on non-convergence.
QuasiDecomposition rom(const PauliVector& target, const StabilizerBasis& basis,
                       const RomOptions& options = {});

/// Same LP on a reduced basis; the value is an upper bound on the true ROM.
QuasiDecomposition rom_upper_bound(const PauliVector& target, const StabilizerBasis& reduced,
                                   const RomOptions& options = {});

/// Verifies a decomposition against a target: reconstruction residual and
/// coefficient sum. Used for cache validation and tests.
double reconstruction_residual(const QuasiDecomposition& d, const StabilizerBasis& basis,
                               const PauliVector& target);

/// ROM of (1-p)|U(theta)><U(theta)| + p Z|U(theta)><U(theta)|Z over the full
/// one-qubit basis.
double rom_dephased_rotation(double theta, double p);

/// Closed-form single-qubit oracle: max(1, |bx| + |by| + |bz|) with Bloch
/// vector ((1-2p) cos theta, (1-2p) sin theta, 0).
double rom_dephased_rotation_analytic(double theta, double p);

/// value^(total_copies / block_copies): submultiplicative bound obtained from
/// the ROM of a block of `block_copies` copies.
double power_per_copy(double value, int block_copies, double total_copies);

/// Product of v^e over (value, exponent) blocks.
double submultiplicative_bound(const std::vector<std::pair<double, double>>& value_and_exponent);

}  // namespace qpsim

#endif  // QPSIM_ROM_HPP
