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

#include "qpsim/rom.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <unordered_map>

#include "qpsim/io.hpp"
#include "qpsim/simplex.hpp"

namespace qpsim {

double QuasiDecomposition::coefficient_sum() const {
  double sum = 0.0;
  for (double x : coefficients) sum += x;
  return sum;
}

namespace {

constexpr double kCoeffZeroTol = 1e-13;

QuasiDecomposition solve_rom_lp(const PauliVector& target, const StabilizerBasis& basis,
                                const RomOptions& options) {
  if (target.num_qubits() != basis.n) {
    throw std::invalid_argument("target and basis qubit counts differ");
  }
  if (std::abs(target[0] - 1.0) > 1e-9) {
    throw std::invalid_argument("target is not trace-normalized (identity coefficient != 1)");
  }

  // Restrict to rows where either the target or some column has support; a
  // target coefficient outside every column's support is unreachable.
  size_t full = target.size();
  std::vector<int32_t> row_of_label(full, -1);
  std::vector<PauliLabel> rows;
  auto touch = [&](PauliLabel l) {
    if (row_of_label[l] < 0) {
      row_of_label[l] = static_cast<int32_t>(rows.size());
      rows.push_back(l);
    }
  };
  touch(0);
  for (PauliLabel l = 1; l < full; ++l) {
    if (std::abs(target[l]) > kCoeffZeroTol) touch(l);
  }
  std::vector<uint8_t> covered(rows.size(), 0);
  covered[0] = 1;
  for (const auto& column : basis.columns) {
    for (const auto& [label, sign] : column.entries) {
      if (row_of_label[label] >= 0) covered[row_of_label[label]] = 1;
    }
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!covered[r]) {
      throw InfeasibleError("target has Pauli support outside the basis span: label " +
                            PauliString::from_label(basis.n, rows[r]).str());
    }
  }
  // Columns may also touch labels the target misses; those rows constrain the
  // combination to cancel there, so they must be kept.
  for (const auto& column : basis.columns) {
    for (const auto& [label, sign] : column.entries) touch(label);
  }

  int m = static_cast<int>(rows.size());
  int n_states = static_cast<int>(basis.size());
  std::vector<double> b(m, 0.0);
  for (int r = 0; r < m; ++r) b[r] = target[rows[r]];

  // Sparse rows of each state, in restricted-row coordinates.
  auto state_entries = [&](int j, std::vector<std::pair<int32_t, double>>& out) {
    out.clear();
    for (const auto& [label, sign] : basis.columns[j].entries) {
      out.emplace_back(row_of_label[label], static_cast<double>(sign));
    }
    std::sort(out.begin(), out.end());
  };

  // The optimal decomposition touches at most m states, so the LP is solved
  // by column generation: a restricted problem over an active state set, with
  // all remaining states priced against the dual after each pass. Global
  // encodings for warm starts: u_j = j, v_j = n_states + j, artificial of row
  // r = 2 n_states + r.
  std::vector<int32_t> active;
  std::vector<uint8_t> in_active(n_states, 0);
  auto activate = [&](int j) {
    if (!in_active[j]) {
      in_active[j] = 1;
      active.push_back(j);
    }
  };

  if (options.warm_basis != nullptr) {
    for (int32_t id : *options.warm_basis) {
      if (id < 2 * n_states) activate(id % n_states);
    }
  }
  {
    // Seed with the states most aligned with the target.
    std::vector<std::pair<double, int>> scores(n_states);
    std::vector<std::pair<int32_t, double>> entries;
    for (int j = 0; j < n_states; ++j) {
      state_entries(j, entries);
      double score = 0.0;
      for (const auto& [row, value] : entries) score += value * b[row];
      scores[j] = {-std::abs(score), j};
    }
    size_t seed_count = std::min<size_t>(n_states, std::max(512, 4 * m));
    std::partial_sort(scores.begin(), scores.begin() + seed_count, scores.end());
    for (size_t k = 0; k < seed_count; ++k) activate(scores[k].second);
  }

  // The target leaves most rows at exactly zero, so every feasible basis of
  //itself is massively degenerate and the simplex crawls. The solves
  // therefore follow a homotopy: the right-hand side is shifted inside the
  // column cone (which makes the LP generic), column generation runs to
  // global optimality there, and the shift is then driven to zero through
  // warm-started re-solves. By LP sensitivity each shrink step needs only a
  // few pivots.
  std::vector<std::pair<int32_t, double>> entries;
  std::vector<double> cone_shift(m, 0.0);
  for (int j : active) {
    double golden = (j + 1) * 0.6180339887498949;
    double weight = 1e-6 * (0.5 + (golden - std::floor(golden)));
    state_entries(j, entries);
    for (const auto& [row, value] : entries) cone_shift[row] += weight * value;
  }

  constexpr int kMaxPasses = 400;
  constexpr int kColumnsPerPass = 512;
  const bool debug = std::getenv("QPSIM_LP_DEBUG") != nullptr;
  std::vector<int32_t> warm_global =
      options.warm_basis != nullptr ? *options.warm_basis : std::vector<int32_t>{};
  LpResult res;
  int64_t total_iterations = 0;
  int pass = 0;

  // Runs column generation at one homotopy level; returns with warm_global
  // holding a globally dual-feasible optimal basis for that level.
  auto solve_level = [&](double eps) {
    for (bool retried = false;; ++pass) {
      if (pass >= kMaxPasses) {
        throw SolverError("column generation failed to converge");
      }
      int k = static_cast<int>(active.size());
      SparseMatrix a(m);
      for (int idx = 0; idx < k; ++idx) {
        state_entries(active[idx], entries);
        a.add_column(entries);
      }
      for (int idx = 0; idx < k; ++idx) a.add_negated_column(idx);
      std::vector<double> cost(2 * k, 1.0);
      std::vector<int32_t> partner(2 * k);
      std::vector<int32_t> global_of(2 * k + m);
      for (int idx = 0; idx < k; ++idx) {
        partner[idx] = idx + k;
        partner[idx + k] = idx;
        global_of[idx] = active[idx];
        global_of[idx + k] = active[idx] + n_states;
      }
      for (int r = 0; r < m; ++r) global_of[2 * k + r] = 2 * n_states + r;

      std::vector<double> b_eps(m);
      for (int r = 0; r < m; ++r) b_eps[r] = b[r] + eps * cone_shift[r];

      // Remap the warm basis into subset coordinates when every entry is
      // active (append-only activation keeps earlier bases mappable).
      std::vector<int32_t> warm_subset;
      if (static_cast<int>(warm_global.size()) == m) {
        std::vector<int32_t> subset_of_state(n_states, -1);
        for (int idx = 0; idx < k; ++idx) subset_of_state[active[idx]] = idx;
        warm_subset.reserve(m);
        bool ok = true;
        for (int32_t id : warm_global) {
          if (id >= 2 * n_states) {
            warm_subset.push_back(2 * k + (id - 2 * n_states));
          } else if (subset_of_state[id % n_states] >= 0) {
            int idx = subset_of_state[id % n_states];
            warm_subset.push_back(id < n_states ? idx : idx + k);
          } else {
            ok = false;
            break;
          }
        }
        if (!ok) warm_subset.clear();
      }

      LpOptions lp;
      lp.negation_partner = &partner;
      if (!warm_subset.empty()) lp.warm_basis = &warm_subset;
      LpResult attempt = solve_lp_min(a, cost, b_eps, lp);
      total_iterations += attempt.iterations;
      if (debug) {
        std::fprintf(stderr,
                     "[rom] pass %d eps=%g: active=%d status=%d obj=%.9f iters=%lld total=%lld\n",
                     pass, eps, k, static_cast<int>(attempt.status), attempt.objective,
                     static_cast<long long>(attempt.iterations),
                     static_cast<long long>(total_iterations));
      }
      if (attempt.status == LpStatus::Infeasible) {
        throw InfeasibleError("decomposition LP is infeasible for basis " + basis.tag);
      }
      if (attempt.status != LpStatus::Optimal) {
        if (!retried) {
          // Drop the warm basis and rebuild this level from scratch once.
          retried = true;
          warm_global.clear();
          continue;
        }
        throw SolverError(std::string("decomposition LP failed: ") +
                          std::string(lp_status_name(attempt.status)));
      }

      // Price every inactive state against the dual: the pair (u_j, v_j) is
      // satisfied iff |y . A_j| <= 1. Dual feasibility is independent of the
      // right-hand side, so violations found here are violations at eps = 0
      // as well.
      std::vector<std::pair<double, int>> violating;
      for (int j = 0; j < n_states; ++j) {
        if (in_active[j]) continue;
        state_entries(j, entries);
        double dot = 0.0;
        for (const auto& [row, value] : entries) dot += value * attempt.dual[row];
        double violation = std::abs(dot) - 1.0;
        if (violation > 1e-8) violating.emplace_back(-violation, j);
      }
      warm_global.assign(m, 0);
      for (int slot = 0; slot < m; ++slot) warm_global[slot] = global_of[attempt.basis[slot]];
      if (violating.empty()) {
        res = std::move(attempt);
        res.basis = warm_global;
        return;
      }
      size_t add = std::min<size_t>(violating.size(), kColumnsPerPass);
      std::partial_sort(violating.begin(), violating.begin() + add, violating.end());
      for (size_t v = 0; v < add; ++v) activate(violating[v].second);
    }
  };

  solve_level(1.0);
  solve_level(1e-3);
  solve_level(0.0);

  QuasiDecomposition out;
  out.n = basis.n;
  out.basis_tag = basis.tag;
  out.iterations = total_iterations;
  out.lp_basis = res.basis;
  int k = static_cast<int>(active.size());
  double l1 = 0.0;
  std::vector<std::pair<int32_t, double>> kept;
  for (int idx = 0; idx < k; ++idx) {
    double x = res.x[idx] - res.x[idx + k];
    if (std::abs(x) > 1e-12) {
      kept.emplace_back(active[idx], x);
      l1 += std::abs(x);
    }
  }
  std::sort(kept.begin(), kept.end());
  for (const auto& [state, x] : kept) {
    out.state_indices.push_back(state);
    out.coefficients.push_back(x);
  }
  out.l1 = l1;
  double dual = 0.0;
  for (int r = 0; r < m; ++r) dual += res.dual[r] * b[r];
  out.dual_objective = dual;
  out.residual = reconstruction_residual(out, basis, target);
  if (out.residual > 1e-7) {
    throw SolverError("decomposition residual above tolerance: " + std::to_string(out.residual));
  }
  return out;
}

}  // namespace

QuasiDecomposition rom(const PauliVector& target, const StabilizerBasis& basis,
                       const RomOptions& options) {
  if (!options.cache_dir.empty()) {
    std::string key = decomposition_cache_key(target, basis.tag);
    std::optional<QuasiDecomposition> cached = load_cached_decomposition(options.cache_dir, key);
    if (cached.has_value() && cached->basis_tag == basis.tag &&
        reconstruction_residual(*cached, basis, target) <= 1e-7) {
      return *cached;
    }
    QuasiDecomposition fresh = solve_rom_lp(target, basis, options);
    store_cached_decomposition(options.cache_dir, key, fresh);
    return fresh;
  }
  return solve_rom_lp(target, basis, options);
}

QuasiDecomposition rom_upper_bound(const PauliVector& target, const StabilizerBasis& reduced,
                                   const RomOptions& options) {
  return rom(target, reduced, options);
}

double reconstruction_residual(const QuasiDecomposition& d, const StabilizerBasis& basis,
                               const PauliVector& target) {
  PauliVector sum(basis.n);
  for (size_t k = 0; k < d.state_indices.size(); ++k) {
    const BasisColumn& col = basis.columns[d.state_indices[k]];
    for (const auto& [label, sign] : col.entries) {
      sum[label] += sign * d.coefficients[k];
    }
  }
  double residual = 0.0;
  for (PauliLabel l = 0; l < target.size(); ++l) {
    residual = std::max(residual, std::abs(sum[l] - target[l]));
  }
  return residual;
}

double rom_dephased_rotation(double theta, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("dephasing rate out of range");
  PauliVector target(1);
  target[0] = 1.0;
  target[1] = (1.0 - 2.0 * p) * std::cos(theta);
  target[2] = (1.0 - 2.0 * p) * std::sin(theta);
  target[3] = 0.0;
  static const StabilizerBasis kOneQubit = full_stabilizer_basis(1);
  return rom(target, kOneQubit).l1;
}

double rom_dephased_rotation_analytic(double theta, double p) {
  double bx = (1.0 - 2.0 * p) * std::cos(theta);
  double by = (1.0 - 2.0 * p) * std::sin(theta);
  return std::max(1.0, std::abs(bx) + std::abs(by));
}

double power_per_copy(double value, int block_copies, double total_copies) {
  if (value <= 0.0 || block_copies < 1) throw std::invalid_argument("bad bound arguments");
  return std::pow(value, total_copies / block_copies);
}

double submultiplicative_bound(const std::vector<std::pair<double, double>>& value_and_exponent) {
  double out = 1.0;
  for (const auto& [value, exponent] : value_and_exponent) {
    if (value <= 0.0) throw std::invalid_argument("bound values must be positive");
    out *= std::pow(value, exponent);
  }
  return out;
}

}  // namespace qpsim
