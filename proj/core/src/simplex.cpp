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

#include "qpsim/simplex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace qpsim {

void SparseMatrix::add_column(std::span<const std::pair<int32_t, double>> entries) {
  for (const auto& [row, value] : entries) {
    if (row < 0 || row >= rows_) throw std::invalid_argument("row index out of range");
    row_idx_.push_back(row);
    values_.push_back(value);
  }
  col_offsets_.push_back(static_cast<int64_t>(row_idx_.size()));
}

void SparseMatrix::add_negated_column(int src) {
  if (src < 0 || src >= cols()) throw std::invalid_argument("column index out of range");
  int64_t begin = col_offsets_[src], end = col_offsets_[src + 1];
  for (int64_t k = begin; k < end; ++k) {
    row_idx_.push_back(row_idx_[k]);
    values_.push_back(-values_[k]);
  }
  col_offsets_.push_back(static_cast<int64_t>(row_idx_.size()));
}

std::span<const int32_t> SparseMatrix::column_rows(int j) const {
  return {row_idx_.data() + col_offsets_[j],
          static_cast<size_t>(col_offsets_[j + 1] - col_offsets_[j])};
}

std::span<const double> SparseMatrix::column_values(int j) const {
  return {values_.data() + col_offsets_[j],
          static_cast<size_t>(col_offsets_[j + 1] - col_offsets_[j])};
}

std::string_view lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::IterationLimit: return "iteration-limit";
    case LpStatus::NumericalFailure: return "numerical-failure";
  }
  return "?";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

class SimplexSolver {
 public:
  SimplexSolver(const SparseMatrix& a, std::span<const double> c,
                std::span<const double> b, const LpOptions& opt)
      : a_(a), c_(c.begin(), c.end()), b_(b.begin(), b.end()), opt_(opt),
        m_(a.rows()), n_(a.cols()) {
    if (static_cast<int>(c.size()) != n_ || static_cast<int>(b.size()) != m_) {
      throw std::invalid_argument("LP dimension mismatch");
    }
    art_sign_.resize(m_);
    for (int r = 0; r < m_; ++r) art_sign_[r] = b_[r] >= 0 ? 1.0 : -1.0;
  }

  LpResult run() {
    bool warm_ok = opt_.warm_basis != nullptr && try_warm_start();
    if (!warm_ok) cold_start();

    if (has_artificials()) {
      LpStatus s = optimize(/*phase1=*/true);
      if (s != LpStatus::Optimal) return finish(s);
      double infeas = artificial_level();
      if (infeas > opt_.feas_tol) return finish(LpStatus::Infeasible);
    }
    LpStatus s = optimize(/*phase1=*/false);
    return finish(s);
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  bool is_artificial(int32_t id) const { return id >= n_; }

  bool has_artificials() const {
    for (int32_t id : basis_) {
      if (is_artificial(id)) return true;
    }
    return false;
  }

  double artificial_level() const {
    double level = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (is_artificial(basis_[i])) level += std::max(xb_[i], 0.0);
    }
    return level;
  }

  void scatter_column(int32_t id, VectorXd& out) const {
    out.setZero();
    if (is_artificial(id)) {
      out[id - n_] = art_sign_[id - n_];
      return;
    }
    auto rows = a_.column_rows(id);
    auto vals = a_.column_values(id);
    for (size_t k = 0; k < rows.size(); ++k) out[rows[k]] = vals[k];
  }

  double column_dot(const VectorXd& y, int32_t id) const {
    if (is_artificial(id)) return y[id - n_] * art_sign_[id - n_];
    auto rows = a_.column_rows(id);
    auto vals = a_.column_values(id);
    double acc = 0.0;
    for (size_t k = 0; k < rows.size(); ++k) acc += y[rows[k]] * vals[k];
    return acc;
  }

  void refactorize() {
    MatrixXd basis_matrix = MatrixXd::Zero(m_, m_);
    VectorXd col(m_);
    for (int i = 0; i < m_; ++i) {
      scatter_column(basis_[i], col);
      basis_matrix.col(i) = col;
    }
    lu_.compute(basis_matrix);
    diagonal_factor_ = false;
    etas_.clear();
    eta_slots_.clear();
    ++refactorizations_;
    xb_ = ftran(Eigen::Map<const VectorXd>(b_.data(), m_));
  }

  void cold_start() {
    basis_.resize(m_);
    in_basis_.assign(static_cast<size_t>(n_) + m_, 0);
    for (int r = 0; r < m_; ++r) {
      basis_[r] = n_ + r;
      in_basis_[n_ + r] = 1;
    }
    // The all-artificial basis is diag(sign(b)); no LU needed.
    diagonal_factor_ = true;
    etas_.clear();
    eta_slots_.clear();
    xb_.resize(m_);
    for (int r = 0; r < m_; ++r) xb_[r] = b_[r] * art_sign_[r];
  }

  bool try_warm_start() {
    const auto& warm = *opt_.warm_basis;
    if (static_cast<int>(warm.size()) != m_) return false;
    in_basis_.assign(static_cast<size_t>(n_) + m_, 0);
    for (int32_t id : warm) {
      if (id < 0 || id >= n_ + m_ || in_basis_[id]) return false;
      in_basis_[id] = 1;
    }
    basis_.assign(warm.begin(), warm.end());
    refactorize();
    // Singular or badly conditioned starting bases show up as a large
    // residual of B xb = b.
    VectorXd residual = Eigen::Map<const VectorXd>(b_.data(), m_);
    VectorXd col(m_);
    for (int i = 0; i < m_; ++i) {
      scatter_column(basis_[i], col);
      residual -= xb_[i] * col;
    }
    if (!xb_.allFinite() || residual.lpNorm<Eigen::Infinity>() > 1e-6) return false;
    if (opt_.negation_partner != nullptr) {
      const auto& partner = *opt_.negation_partner;
      for (int i = 0; i < m_; ++i) {
        if (xb_[i] >= -opt_.feas_tol) continue;
        int32_t id = basis_[i];
        if (is_artificial(id)) return false;
        int32_t twin = partner[id];
        if (twin < 0 || in_basis_[twin]) return false;
        in_basis_[id] = 0;
        in_basis_[twin] = 1;
        basis_[i] = twin;
        VectorXd flip = -VectorXd::Unit(m_, i);
        push_eta(i, flip);
        xb_[i] = -xb_[i];
      }
    }
    for (int i = 0; i < m_; ++i) {
      if (xb_[i] < -opt_.feas_tol) return false;
    }
    return true;
  }

  VectorXd ftran(VectorXd v) const {
    if (diagonal_factor_) {
      for (int r = 0; r < m_; ++r) v[r] *= art_sign_[r];
    } else {
      v = lu_.solve(v);
    }
    for (size_t k = 0; k < etas_.size(); ++k) {
      int r = eta_slots_[k];
      const VectorXd& d = etas_[k];
      double pivot_val = v[r] / d[r];
      if (pivot_val != 0.0) v -= pivot_val * d;
      v[r] = pivot_val;
    }
    return v;
  }

  VectorXd btran(VectorXd w) const {
    for (size_t k = etas_.size(); k-- > 0;) {
      int r = eta_slots_[k];
      const VectorXd& d = etas_[k];
      double dot = d.dot(w);
      w[r] = (w[r] - (dot - d[r] * w[r])) / d[r];
    }
    if (diagonal_factor_) {
      for (int r = 0; r < m_; ++r) w[r] *= art_sign_[r];
      return w;
    }
    // A = P^-1 L U, so A^T y = w unrolls to U^T z = w, L^T g = z, y = P^T g.
    const MatrixXd& lu = lu_.matrixLU();
    VectorXd z = lu.triangularView<Eigen::Upper>().transpose().solve(w);
    VectorXd g = lu.triangularView<Eigen::UnitLower>().transpose().solve(z);
    return lu_.permutationP().transpose() * g;
  }

  void push_eta(int slot, VectorXd d) {
    eta_slots_.push_back(slot);
    etas_.push_back(std::move(d));
  }

  // Flips negative basic values to their negation partners (or flips the
  // artificial's sign), restoring primal feasibility after drift. Returns
  // false when a negative slot has no usable partner.
  bool repair_feasibility() {
    for (int i = 0; i < m_; ++i) {
      if (xb_[i] >= -1e-9) continue;
      int32_t id = basis_[i];
      if (is_artificial(id)) {
        art_sign_[id - n_] = -art_sign_[id - n_];
      } else {
        int32_t twin =
            opt_.negation_partner != nullptr ? (*opt_.negation_partner)[id] : -1;
        if (twin < 0 || in_basis_[twin]) return false;
        in_basis_[id] = 0;
        in_basis_[twin] = 1;
        basis_[i] = twin;
      }
      push_eta(i, -VectorXd::Unit(m_, i));
      xb_[i] = -xb_[i];
    }
    return true;
  }

  double cost_of(int32_t id, bool phase1) const {
    if (phase1) return is_artificial(id) ? 1.0 : 0.0;
    return is_artificial(id) ? 0.0 : c_[id];
  }

  VectorXd basic_costs(bool phase1) const {
    VectorXd cb(m_);
    for (int i = 0; i < m_; ++i) cb[i] = cost_of(basis_[i], phase1);
    return cb;
  }

  LpStatus optimize(bool phase1) {
    int64_t stall = 0;
    bool bland = false;
    const bool debug = std::getenv("QPSIM_LP_DEBUG") != nullptr;

    // Reduced costs are maintained incrementally and refreshed from the
    // duals at every refactorization; entering columns are picked by Devex
    // reference weights, which keeps the iteration count on heavily
    // degenerate problems sane.
    VectorXd cb = basic_costs(phase1);
    std::vector<double> d(n_, 0.0);
    std::vector<double> devex(n_, 1.0);
    auto full_price = [&]() {
      cb = basic_costs(phase1);
      VectorXd y = btran(cb);
      for (int j = 0; j < n_; ++j) {
        d[j] = in_basis_[j] ? 0.0 : cost_of(j, phase1) - column_dot(y, j);
      }
    };
    full_price();

    // Two-pass ratio test: find the exact minimum ratio, then pick the
    // largest pivot among the (typically degenerate, ratio-zero) ties so the
    // eta chain stays well conditioned. A basic artificial at level zero is
    // pinned there, so any nonzero pivot forces theta = 0 and kicks it out;
    // positive-level artificials (Phase 1 only) act like ordinary variables.
    auto candidate_ratio = [&](const VectorXd& w, int i, double& wi_out) -> double {
      double wi = w[i];
      bool artificial = is_artificial(basis_[i]);
      wi_out = wi;
      if (artificial && std::abs(wi) > opt_.pivot_tol && xb_[i] <= opt_.feas_tol) {
        return 0.0;
      }
      if (wi > opt_.pivot_tol) {
        return std::max(xb_[i], 0.0) / wi;
      }
      return -1.0;  // not a candidate
    };
    auto ratio_test = [&](const VectorXd& w, bool use_bland) -> std::pair<int, double> {
      double theta_min = kInf;
      for (int i = 0; i < m_; ++i) {
        double wi;
        double ratio = candidate_ratio(w, i, wi);
        if (ratio >= 0.0) theta_min = std::min(theta_min, ratio);
      }
      int leave = -1;
      double leave_piv = 0.0;
      if (theta_min == kInf) return {leave, leave_piv};
      double tie_bound = theta_min + 1e-12;
      for (int i = 0; i < m_; ++i) {
        double wi;
        double ratio = candidate_ratio(w, i, wi);
        if (ratio < 0.0 || ratio > tie_bound) continue;
        bool better;
        if (leave < 0) {
          better = true;
        } else if (use_bland) {
          better = basis_[i] < basis_[leave];
        } else {
          better = std::abs(wi) > std::abs(leave_piv);
        }
        if (better) {
          leave = i;
          leave_piv = wi;
        }
      }
      return {leave, leave_piv};
    };

    bool just_refreshed = true;
    while (true) {
      if (++iterations_ > opt_.max_iterations) return LpStatus::IterationLimit;
      if (debug && iterations_ % 20000 == 0) {
        double obj = basic_costs(phase1).dot(xb_);
        std::fprintf(stderr, "[simplex] iter=%lld phase%d obj=%.9f bland=%d stall=%lld\n",
                     static_cast<long long>(iterations_), phase1 ? 1 : 2, obj, bland ? 1 : 0,
                     static_cast<long long>(stall));
      }
      int entering = -1;
      if (bland) {
        for (int j = 0; j < n_; ++j) {
          if (!in_basis_[j] && d[j] < -opt_.entering_tol) {
            entering = j;
            break;
          }
        }
      } else {
        double best_score = 0.0;
        for (int j = 0; j < n_; ++j) {
          if (in_basis_[j] || d[j] >= -opt_.entering_tol) continue;
          double score = d[j] * d[j] / devex[j];
          if (score > best_score) {
            best_score = score;
            entering = j;
          }
        }
      }
      if (entering < 0) {
        if (just_refreshed) return LpStatus::Optimal;
        full_price();
        just_refreshed = true;
        continue;
      }

      VectorXd col(m_);
      scatter_column(entering, col);
      VectorXd w = ftran(col);

      // Incremental reduced costs drift; confirm the candidate before
      // pivoting and refresh when it has gone stale.
      double d_exact = cost_of(entering, phase1) - cb.dot(w);
      if (d_exact >= -opt_.entering_tol) {
        if (!just_refreshed) {
          full_price();
          just_refreshed = true;
        } else {
          d[entering] = d_exact;  // drop the stale candidate
        }
        continue;
      }
      just_refreshed = false;

      auto [leave, leave_piv] = ratio_test(w, bland);
      // A small pivot through a long eta chain is untrustworthy: refactorize
      // and redo the step against fresh factors.
      if (leave >= 0 && std::abs(leave_piv) < 1e-5 && !etas_.empty()) {
        refactorize();
        full_price();
        just_refreshed = true;
        scatter_column(entering, col);
        w = ftran(col);
        d_exact = cost_of(entering, phase1) - cb.dot(w);
        if (d_exact >= -opt_.entering_tol) {
          d[entering] = d_exact;
          continue;
        }
        std::tie(leave, leave_piv) = ratio_test(w, bland);
      }
      if (leave < 0) {
        return phase1 ? LpStatus::NumericalFailure : LpStatus::Unbounded;
      }
      double theta = leave_piv > 0.0 ? std::max(xb_[leave], 0.0) / leave_piv : 0.0;

      // Dual update pass: alpha_j = (row `leave` of B^-1 A)_j drives both the
      // incremental reduced costs and the Devex weights.
      {
        VectorXd beta = btran(VectorXd::Unit(m_, leave));
        double alpha_q = w[leave];
        double step = d_exact / alpha_q;
        double gamma_q = std::max(devex[entering], 1.0);
        double weight_scale = gamma_q / (alpha_q * alpha_q);
        double weight_max = 1.0;
        for (int j = 0; j < n_; ++j) {
          if (in_basis_[j] || j == entering) continue;
          double alpha_j = column_dot(beta, j);
          if (alpha_j == 0.0) continue;
          d[j] -= step * alpha_j;
          double cand = alpha_j * alpha_j * weight_scale;
          if (cand > devex[j]) devex[j] = cand;
          if (devex[j] > weight_max) weight_max = devex[j];
        }
        int32_t leaving_id = basis_[leave];
        if (!is_artificial(leaving_id)) {
          d[leaving_id] = -step;
          devex[leaving_id] = std::max(weight_scale, 1.0);
        }
        d[entering] = 0.0;
        if (weight_max > 1e7) devex.assign(n_, 1.0);  // restart the framework
      }

      // Update basic values and the factorization.
      bool tiny_pivot = std::abs(leave_piv) < 1e-5;
      if (theta != 0.0) xb_ -= theta * w;
      xb_[leave] = theta;
      cb[leave] = cost_of(entering, phase1);
      in_basis_[basis_[leave]] = 0;
      in_basis_[entering] = 1;
      basis_[leave] = entering;
      push_eta(leave, std::move(w));
      if (tiny_pivot || static_cast<int>(etas_.size()) >= opt_.refactor_interval) {
        refactorize();
        // Pivoting on drifted values can leave the refreshed basis slightly
        // infeasible; flip the offending slots back into the cone.
        if (xb_.minCoeff() < -1e-9 && !repair_feasibility()) {
          if (debug) {
            std::fprintf(stderr, "[simplex] unrepairable refactor: iter=%lld phase%d min=%g\n",
                         static_cast<long long>(iterations_), phase1 ? 1 : 2, xb_.minCoeff());
          }
          return LpStatus::NumericalFailure;
        }
        full_price();
        just_refreshed = true;
      }

      if (theta <= 1e-11) {
        if (++stall > 2000 && !bland) bland = true;
      } else {
        stall = 0;
        bland = false;
      }
    }
  }

  LpResult finish(LpStatus status) {
    LpResult result;
    result.status = status;
    result.iterations = iterations_;
    result.refactorizations = refactorizations_;
    result.basis = basis_;
    result.x.assign(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) {
        result.x[basis_[i]] = std::max(xb_[i], 0.0);
      }
    }
    double obj = 0.0;
    for (int j = 0; j < n_; ++j) obj += c_[j] * result.x[j];
    result.objective = obj;
    VectorXd y = btran(basic_costs(false));
    result.dual.assign(y.data(), y.data() + m_);
    VectorXd residual = -Eigen::Map<const VectorXd>(b_.data(), m_);
    for (int j = 0; j < n_; ++j) {
      if (result.x[j] == 0.0) continue;
      auto rows = a_.column_rows(j);
      auto vals = a_.column_values(j);
      for (size_t k = 0; k < rows.size(); ++k) residual[rows[k]] += vals[k] * result.x[j];
    }
    result.max_primal_residual = residual.lpNorm<Eigen::Infinity>();
    return result;
  }

  const SparseMatrix& a_;
  std::vector<double> c_;
  std::vector<double> b_;
  LpOptions opt_;
  int m_, n_;

  std::vector<double> art_sign_;
  std::vector<int32_t> basis_;
  std::vector<uint8_t> in_basis_;
  Eigen::PartialPivLU<MatrixXd> lu_;
  bool diagonal_factor_ = false;
  std::vector<VectorXd> etas_;
  std::vector<int> eta_slots_;
  VectorXd xb_;
  int64_t iterations_ = 0;
  int refactorizations_ = 0;
};

}  // namespace

LpResult solve_lp_min(const SparseMatrix& a, std::span<const double> c,
                      std::span<const double> b, const LpOptions& options) {
  return SimplexSolver(a, c, b, options).run();
}

}  // namespace qpsim
