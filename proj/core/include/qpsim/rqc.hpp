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

#ifndef QPSIM_RQC_HPP
#define QPSIM_RQC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpsim/rom.hpp"

namespace qpsim {

/// A brick of random circuit on an m x n qubit lattice: each cycle applies
/// single-qubit gates drawn uniformly from {sqrt(X), sqrt(Y), T} to every
/// qubit, then CZ on alternating nonoverlapping nearest-neighbor pairs, with
/// depolarizing noise p1 / p2 after every one-/two-qubit gate.
struct RqcSpec {
  int rows = 0;
  int cols = 0;
  int cycles = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  uint64_t seed = 0;
};

struct UnitCellCounts {
  uint64_t total = 0;       // D: number of two-qubit-gate slots
  double expected1 = 0.0;   // (4/9) D
  double expected2 = 0.0;   // (4/9) D
  double expected3 = 0.0;   // (1/9) D
  double expected_t = 0.0;  // (2/3) D
  uint64_t n1 = 0, n2 = 0, n3 = 0;  // empirical, from the seeded draw
  uint64_t t_count = 0;
};

UnitCellCounts unit_cell_counts(const RqcSpec& spec);

struct CostReport {
  std::string method;    // stabilizer | optimized_stabilizer | heisenberg
  double t = 0.0;        // T-count entering the scaling
  double cost_log2 = 0.0;
  double alpha = 0.0;    // cost = 2^(alpha t)
};

/// Per-unit-cell simulation costs at noise rate p: single-copy ROM upper
/// bounds on the 4-qubit resources and two-fold-copy ROMs on 8 qubits, via
/// the reduced pair basis.
struct UnitCellRoms {
  double rom_unit2 = 0.0;
  double rom_unit3 = 0.0;
  double rom_unit2_pair = 0.0;  // ROM of two copies
  double rom_unit3_pair = 0.0;
};

/// Solves and caches the unit-cell ROM programs, and aggregates circuit-level
/// costs for the three sampling strategies. LP solves warm-start from the
/// previous noise rate, so sweeps should go in ascending p.
class RqcCostModel {
 public:
  explicit RqcCostModel(std::string cache_dir = "", int threads = 1);

  UnitCellRoms unit_roms(double p);

  /// Closed-form Heisenberg scaling exponent; exactly 1 at p = 0.
  static double alpha_heisenberg(double p);
  double alpha_stabilizer(double p);
  double alpha_optimized(double p);

  CostReport heisenberg_cost(const RqcSpec& spec) const;
  CostReport stabilizer_cost(const RqcSpec& spec, bool optimized);

  /// Smallest grid p where the Heisenberg unit-cell norm drops to (or below)
  /// the optimized per-unit stabilizer cost; nullopt when the curves never
  /// cross (e.g. when comparing a scheme against itself).
  std::optional<double> crossover(int kind, double p_max = 0.2, double step = 0.01);

  struct ScalingRow {
    double p = 0.0;
    double alpha_stab = 0.0;
    double alpha_opt = 0.0;
    double alpha_heis = 0.0;
  };
  std::vector<ScalingRow> scaling_sweep(std::span<const double> p_grid);

 private:
  std::string cache_dir_;
  int threads_;
  std::vector<std::pair<double, UnitCellRoms>> rom_cache_;
  std::vector<int32_t> warm2_, warm3_, warm2p_, warm3p_;
};

/// First grid point where curve_b(p) <= curve_a(p); nullopt for identical
/// curves or if they never meet.
std::optional<double> first_crossover(std::span<const double> grid, std::span<const double> curve_a,
                                      std::span<const double> curve_b);

/// 2^(alpha t) * (2/delta^2) ln(2/epsilon), in log2.
double sample_budget_log2(double t, double alpha, double delta, double epsilon);
/// Same as a count; throws on double overflow.
double sample_budget(double t, double alpha, double delta, double epsilon);

}  // namespace qpsim

#endif  // QPSIM_RQC_HPP
