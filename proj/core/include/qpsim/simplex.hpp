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

#ifndef QPSIM_SIMPLEX_HPP
#define QPSIM_SIMPLEX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qpsim {

/// Column-major sparse matrix for the LP engine.
class SparseMatrix {
 public:
  explicit SparseMatrix(int rows) : rows_(rows), col_offsets_{0} {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(col_offsets_.size()) - 1; }

  void add_column(std::span<const std::pair<int32_t, double>> entries);
  /// Appends the negation of an existing column.
  void add_negated_column(int src);

  std::span<const int32_t> column_rows(int j) const;
  std::span<const double> column_values(int j) const;

 private:
  int rows_;
  std::vector<int64_t> col_offsets_;
  std::vector<int32_t> row_idx_;
  std::vector<double> values_;
};

enum class LpStatus {
  Optimal,
  Infeasible,
  Unbounded,
  IterationLimit,
  NumericalFailure,
};

std::string_view lp_status_name(LpStatus s);

struct LpOptions {
  double entering_tol = 1e-9;   // reduced cost must beat this to enter
  double pivot_tol = 1e-8;      // smallest acceptable pivot magnitude
  double feas_tol = 1e-7;       // Phase-1 residual treated as infeasible above this
  int64_t max_iterations = 4'000'000;
  int refactor_interval = 64;   // eta updates between refactorizations
  /// Optional starting basis (entries are column ids, or rows()+r for the
  /// artificial of row r). Falls back to a cold start if singular.
  const std::vector<int32_t>* warm_basis = nullptr;
  /// Optional per-column partner such that column partner[j] == -column j.
  /// Lets a warm start repair negative basic values by sign flips.
  const std::vector<int32_t>* negation_partner = nullptr;
};

struct LpResult {
  LpStatus status = LpStatus::NumericalFailure;
  double objective = 0.0;
  std::vector<double> x;        // primal values per column
  std::vector<double> dual;     // row multipliers y at the final basis
  std::vector<int32_t> basis;   // reusable as a warm start
  double max_primal_residual = 0.0;
  int64_t iterations = 0;
  int refactorizations = 0;
};

/// Minimizes c.x subject to A x = b, x >= 0 with a revised simplex method
/// (dense LU of the basis + product-form eta updates).
LpResult solve_lp_min(const SparseMatrix& a, std::span<const double> c,
                      std::span<const double> b, const LpOptions& options = {});

}  // namespace qpsim

#endif  // QPSIM_SIMPLEX_HPP
