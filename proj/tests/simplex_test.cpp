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

#include <doctest.h>

#include <Eigen/Dense>
#include <random>

using namespace qpsim;

namespace {

SparseMatrix dense_to_sparse(const Eigen::MatrixXd& a) {
  SparseMatrix out(static_cast<int>(a.rows()));
  std::vector<std::pair<int32_t, double>> col;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    col.clear();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != 0.0) col.emplace_back(static_cast<int32_t>(i), a(i, j));
    }
    out.add_column(col);
  }
  return out;
}

// Brute-force LP oracle: enumerate all basis subsets, keep the feasible
// vertex with the best objective. Only for tiny problems.
struct BruteResult {
  bool feasible = false;
  double objective = 0.0;
};

BruteResult brute_force_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& c,
                           const Eigen::VectorXd& b) {
  int m = static_cast<int>(a.rows());
  int n = static_cast<int>(a.cols());
  // Row-reduce [A | b] first so rank-deficient systems get a correct verdict.
  Eigen::MatrixXd aug(m, n + 1);
  aug << a, b;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    double best_piv = 1e-9;
    for (int r = rank; r < m; ++r) {
      if (std::abs(aug(r, col)) > best_piv) {
        best_piv = std::abs(aug(r, col));
        piv = r;
      }
    }
    if (piv < 0) continue;
    aug.row(rank).swap(aug.row(piv));
    for (int r = 0; r < m; ++r) {
      if (r != rank) aug.row(r) -= aug(r, col) / aug(rank, col) * aug.row(rank);
    }
    ++rank;
  }
  for (int r = rank; r < m; ++r) {
    if (std::abs(aug(r, n)) > 1e-8) return {};  // 0 = nonzero row
  }
  Eigen::MatrixXd a2 = aug.topLeftCorner(rank, n);
  Eigen::VectorXd b2 = aug.block(0, n, rank, 1);

  BruteResult best;
  std::vector<int> pick(rank);
  std::function<void(int, int)> recurse = [&](int start, int depth) {
    if (depth == rank) {
      Eigen::MatrixXd basis(rank, rank);
      for (int k = 0; k < rank; ++k) basis.col(k) = a2.col(pick[k]);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
      if (!lu.isInvertible()) return;
      Eigen::VectorXd x = lu.solve(b2);
      for (int k = 0; k < rank; ++k) {
        if (x[k] < -1e-9) return;
      }
      double obj = 0.0;
      for (int k = 0; k < rank; ++k) obj += c[pick[k]] * x[k];
      if (!best.feasible || obj < best.objective) {
        best.feasible = true;
        best.objective = obj;
      }
    } else {
      for (int j = start; j < n; ++j) {
        pick[depth] = j;
        recurse(j + 1, depth + 1);
      }
    }
  };
  recurse(0, 0);
  return best;
}

}  // namespace

TEST_CASE("small hand-written LPs") {
  SUBCASE("two variables, one equality") {
    // min x0 + 2 x1 s.t. x0 + x1 = 1 -> x = (1, 0).
    SparseMatrix a(1);
    a.add_column(std::vector<std::pair<int32_t, double>>{{0, 1.0}});
    a.add_column(std::vector<std::pair<int32_t, double>>{{0, 1.0}});
    std::vector<double> c = {1.0, 2.0};
    std::vector<double> b = {1.0};
    LpResult r = solve_lp_min(a, c, b);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(1.0));
    CHECK(r.x[0] == doctest::Approx(1.0));
    CHECK(r.max_primal_residual < 1e-9);
  }
  SUBCASE("infeasible system") {
    // x0 = 1 and x0 = 2 cannot both hold.
    SparseMatrix a(2);
    a.add_column(std::vector<std::pair<int32_t, double>>{{0, 1.0}, {1, 1.0}});
    std::vector<double> c = {1.0};
    std::vector<double> b = {1.0, 2.0};
    LpResult r = solve_lp_min(a, c, b);
    CHECK(r.status == LpStatus::Infeasible);
  }
  SUBCASE("unbounded objective") {
    // min -x0 with a free direction.
    SparseMatrix a(1);
    a.add_column(std::vector<std::pair<int32_t, double>>{{0, 1.0}});
    a.add_column(std::vector<std::pair<int32_t, double>>{{0, -1.0}});
    std::vector<double> c = {-1.0, -1.0};
    std::vector<double> b = {1.0};
    LpResult r = solve_lp_min(a, c, b);
    CHECK(r.status == LpStatus::Unbounded);
  }
  SUBCASE("redundant rows are tolerated") {
    // Same constraint twice.
    SparseMatrix a(2);
    a.add_column(std::vector<std::pair<int32_t, double>>{{0, 1.0}, {1, 1.0}});
    a.add_column(std::vector<std::pair<int32_t, double>>{{0, 2.0}, {1, 2.0}});
    std::vector<double> c = {3.0, 1.0};
    std::vector<double> b = {2.0, 2.0};
    LpResult r = solve_lp_min(a, c, b);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(1.0));  // x1 = 1
  }
}

TEST_CASE("random LPs agree with brute-force vertex enumeration") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> entry(-2, 2);
  int solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int m = 1 + static_cast<int>(rng() % 3);
    int n = m + 1 + static_cast<int>(rng() % 4);
    Eigen::MatrixXd a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    // Build b inside the cone so most instances are feasible; a quarter get a
    // random shift and may become infeasible (the oracle decides).
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j) x0[j] = (rng() % 3) * 0.5;
    Eigen::VectorXd b = a * x0;
    if (trial % 4 == 0) {
      for (int i = 0; i < m; ++i) b[i] += entry(rng) * 0.75;
    }
    Eigen::VectorXd c(n);
    for (int j = 0; j < n; ++j) c[j] = entry(rng) + 3;  // keep bounded below

    BruteResult brute = brute_force_lp(a, c, b);
    std::vector<double> cv(c.data(), c.data() + n);
    std::vector<double> bv(b.data(), b.data() + m);
    LpResult r = solve_lp_min(dense_to_sparse(a), cv, bv);
    if (brute.feasible) {
      REQUIRE(r.status == LpStatus::Optimal);
      CHECK(r.objective == doctest::Approx(brute.objective).epsilon(1e-7));
      CHECK(r.max_primal_residual < 1e-8);
      ++solved;
    } else {
      CHECK(r.status == LpStatus::Infeasible);
    }
  }
  CHECK(solved > 200);  // the corpus must actually exercise the solver
}

TEST_CASE("duality certificate on random feasible instances") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    int n = 2 * m + static_cast<int>(rng() % 5);
    Eigen::MatrixXd a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j) x0[j] = (rng() % 2) * 1.0;
    Eigen::VectorXd b = a * x0;
    std::vector<double> cv(n, 1.0);
    std::vector<double> bv(b.data(), b.data() + m);
    LpResult r = solve_lp_min(dense_to_sparse(a), cv, bv);
    REQUIRE(r.status == LpStatus::Optimal);
    // Strong duality: b . y equals the primal objective.
    double dual = 0.0;
    for (int i = 0; i < m; ++i) dual += r.dual[i] * bv[i];
    CHECK(dual == doctest::Approx(r.objective).epsilon(1e-7));
    // Dual feasibility: reduced costs stay nonnegative.
    for (int j = 0; j < n; ++j) {
      double ya = 0.0;
      for (int i = 0; i < m; ++i) ya += r.dual[i] * a(i, j);
      CHECK(ya <= 1.0 + 1e-7);
    }
  }
}

TEST_CASE("warm starts with negation partners reproduce the cold solution") {
  // L1-style problem: columns come in +/- pairs.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-2, 2);
  int m = 4, half = 9;
  Eigen::MatrixXd pos(m, half);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < half; ++j) pos(i, j) = entry(rng);
  Eigen::MatrixXd a(m, 2 * half);
  a << pos, -pos;
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(2 * half);
  x0[0] = 1.0;
  x0[3] = 0.5;
  Eigen::VectorXd b = a * x0;
  std::vector<double> cv(2 * half, 1.0);
  std::vector<double> bv(b.data(), b.data() + m);
  std::vector<int32_t> partner(2 * half);
  for (int j = 0; j < half; ++j) {
    partner[j] = j + half;
    partner[j + half] = j;
  }
  SparseMatrix sp = dense_to_sparse(a);
  LpResult cold = solve_lp_min(sp, cv, bv);
  REQUIRE(cold.status == LpStatus::Optimal);

  // Perturb b, then warm-start from the old basis.
  bv[0] += 0.25;
  LpOptions opt;
  opt.warm_basis = &cold.basis;
  opt.negation_partner = &partner;
  LpResult warm = solve_lp_min(sp, cv, bv, opt);
  LpResult fresh = solve_lp_min(sp, cv, bv);
  REQUIRE(warm.status == fresh.status);
  if (fresh.status == LpStatus::Optimal) {
    CHECK(warm.objective == doctest::Approx(fresh.objective).epsilon(1e-8));
    CHECK(warm.iterations <= fresh.iterations);
  }
}
