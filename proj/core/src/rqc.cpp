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

#include "qpsim/rqc.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qpsim/channels.hpp"
#include "qpsim/gadgets.hpp"

namespace qpsim {

namespace {

// log2 of max(1, sqrt(2)(1-p)^2): the unit-cell-2 norm, exact at p = 0.
double log2_d2(double p) {
  if (p >= 1.0) return 0.0;
  return std::max(0.0, 0.5 + 2.0 * std::log2(1.0 - p));
}

// log2 of max(1, sqrt(2)(1-p)^2, 2(1-p)^3): the unit-cell-3 norm.
double log2_d3(double p) {
  if (p >= 1.0) return 0.0;
  double lp = std::log2(1.0 - p);
  return std::max({0.0, 0.5 + 2.0 * lp, 1.0 + 3.0 * lp});
}

}  // namespace

UnitCellCounts unit_cell_counts(const RqcSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || spec.cycles < 0) {
    throw std::invalid_argument("bad lattice dimensions");
  }
  int qubits = spec.rows * spec.cols;
  UnitCellCounts counts;
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> gate_pick(0, 2);  // sqrtX, sqrtY, T
  for (int cycle = 0; cycle < spec.cycles; ++cycle) {
    std::vector<int> gates(qubits);
    for (int q = 0; q < qubits; ++q) gates[q] = gate_pick(rng);
    // Alternate horizontal and vertical nearest-neighbor pairings; within a
    // cycle the pairs are disjoint, so every slot is one unit cell.
    bool horizontal = (cycle % 2) == 0;
    int offset = (cycle / 2) % 2;
    for (int r = 0; r < spec.rows; ++r) {
      for (int c = 0; c < spec.cols; ++c) {
        int a = r * spec.cols + c;
        int b = -1;
        if (horizontal && c + 1 < spec.cols && (c % 2) == offset % 2) b = a + 1;
        if (!horizontal && r + 1 < spec.rows && (r % 2) == offset % 2) b = a + spec.cols;
        if (b < 0) continue;
        ++counts.total;
        int ts = (gates[a] == 2) + (gates[b] == 2);
        if (ts == 0) ++counts.n1;
        if (ts == 1) ++counts.n2;
        if (ts == 2) ++counts.n3;
        counts.t_count += ts;
      }
    }
  }
  counts.expected1 = 4.0 / 9.0 * counts.total;
  counts.expected2 = 4.0 / 9.0 * counts.total;
  counts.expected3 = 1.0 / 9.0 * counts.total;
  counts.expected_t = 2.0 / 3.0 * counts.total;
  return counts;
}

RqcCostModel::RqcCostModel(std::string cache_dir, int threads)
    : cache_dir_(std::move(cache_dir)), threads_(threads) {}

UnitCellRoms RqcCostModel::unit_roms(double p) {
  for (const auto& [cached_p, roms] : rom_cache_) {
    if (std::abs(cached_p - p) < 1e-12) return roms;
  }
  RomOptions opt;
  opt.cache_dir = cache_dir_;

  UnitCellRoms roms;
  ResourceState unit2 = unit_cell_resource(2, p);
  ResourceState unit3 = unit_cell_resource(3, p);

  StabilizerBasis basis2 = reduced_pair_basis(4, unit2.t_qubits);
  opt.warm_basis = warm2_.empty() ? nullptr : &warm2_;
  QuasiDecomposition d2 = rom_upper_bound(unit2.vector, basis2, opt);
  warm2_ = d2.lp_basis;
  roms.rom_unit2 = d2.l1;

  StabilizerBasis basis3 = reduced_pair_basis(4, unit3.t_qubits);
  opt.warm_basis = warm3_.empty() ? nullptr : &warm3_;
  QuasiDecomposition d3 = rom_upper_bound(unit3.vector, basis3, opt);
  warm3_ = d3.lp_basis;
  roms.rom_unit3 = d3.l1;

  ResourceState unit2_pair = unit2.tensor(unit2);
  StabilizerBasis basis2p = reduced_pair_basis(8, unit2_pair.t_qubits);
  opt.warm_basis = warm2p_.empty() ? nullptr : &warm2p_;
  QuasiDecomposition d2p = rom_upper_bound(unit2_pair.vector, basis2p, opt);
  warm2p_ = d2p.lp_basis;
  roms.rom_unit2_pair = d2p.l1;

  ResourceState unit3_pair = unit3.tensor(unit3);
  StabilizerBasis basis3p = reduced_pair_basis(8, unit3_pair.t_qubits);
  opt.warm_basis = warm3p_.empty() ? nullptr : &warm3p_;
  QuasiDecomposition d3p = rom_upper_bound(unit3_pair.vector, basis3p, opt);
  warm3p_ = d3p.lp_basis;
  roms.rom_unit3_pair = d3p.l1;

  rom_cache_.emplace_back(p, roms);
  return roms;
}

double RqcCostModel::alpha_heisenberg(double p) {
  // Per T gate: n2 = 4D/9 cells with one T, n3 = D/9 with two, t = 2D/3.
  return (4.0 * log2_d2(p) + log2_d3(p)) / 3.0;
}

double RqcCostModel::alpha_stabilizer(double p) {
  UnitCellRoms roms = unit_roms(p);
  return (4.0 * std::log2(roms.rom_unit2) + std::log2(roms.rom_unit3)) / 3.0;
}

double RqcCostModel::alpha_optimized(double p) {
  UnitCellRoms roms = unit_roms(p);
  return (4.0 * 0.5 * std::log2(roms.rom_unit2_pair) + 0.5 * std::log2(roms.rom_unit3_pair)) / 3.0;
}

CostReport RqcCostModel::heisenberg_cost(const RqcSpec& spec) const {
  UnitCellCounts counts = unit_cell_counts(spec);
  CostReport report;
  report.method = "heisenberg";
  report.t = counts.expected_t;
  double d = static_cast<double>(counts.total);
  report.cost_log2 = 2.0 * (4.0 * d / 9.0 * log2_d2(spec.p1) + d / 9.0 * log2_d3(spec.p1));
  if (spec.p1 != spec.p2) {
    // General rates: rebuild from the closed forms with both rates.
    UnitCellNorms norms = unit_cell_norms_closed_form(spec.p1, spec.p2);
    report.cost_log2 =
        2.0 * (4.0 * d / 9.0 * std::log2(norms.d2) + d / 9.0 * std::log2(norms.d3));
  }
  report.alpha = report.t > 0 ? report.cost_log2 / report.t : 0.0;
  return report;
}

CostReport RqcCostModel::stabilizer_cost(const RqcSpec& spec, bool optimized) {
  if (spec.p1 != spec.p2) {
    throw std::invalid_argument("stabilizer unit-cell resources assume p1 == p2");
  }
  UnitCellCounts counts = unit_cell_counts(spec);
  UnitCellRoms roms = unit_roms(spec.p1);
  CostReport report;
  report.method = optimized ? "optimized_stabilizer" : "stabilizer";
  report.t = counts.expected_t;
  double d = static_cast<double>(counts.total);
  double f2 = optimized ? 0.5 * std::log2(roms.rom_unit2_pair) : std::log2(roms.rom_unit2);
  double f3 = optimized ? 0.5 * std::log2(roms.rom_unit3_pair) : std::log2(roms.rom_unit3);
  report.cost_log2 = 2.0 * (4.0 * d / 9.0 * f2 + d / 9.0 * f3);
  report.alpha = report.t > 0 ? report.cost_log2 / report.t : 0.0;
  return report;
}

std::optional<double> first_crossover(std::span<const double> grid,
                                      std::span<const double> curve_a,
                                      std::span<const double> curve_b) {
  if (grid.size() != curve_a.size() || grid.size() != curve_b.size()) {
    throw std::invalid_argument("crossover grids must have equal length");
  }
  bool identical = true;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(curve_a[i] - curve_b[i]) > 1e-12) {
      identical = false;
      break;
    }
  }
  if (identical) return std::nullopt;
  for (size_t i = 0; i < grid.size(); ++i) {
    if (curve_b[i] <= curve_a[i] + 1e-12) return grid[i];
  }
  return std::nullopt;
}

std::optional<double> RqcCostModel::crossover(int kind, double p_max, double step) {
  if (kind != 2 && kind != 3) throw std::invalid_argument("unit cell kind must be 2 or 3");
  std::vector<double> grid, stab, heis;
  for (int k = 0;; ++k) {
    double p = k * step;
    if (p > p_max + 1e-12) break;
    grid.push_back(p);
    UnitCellRoms roms = unit_roms(p);
    double per_unit =
        kind == 2 ? std::sqrt(roms.rom_unit2_pair) : std::sqrt(roms.rom_unit3_pair);
    stab.push_back(per_unit);
    heis.push_back(kind == 2 ? std::exp2(log2_d2(p)) : std::exp2(log2_d3(p)));
  }
  return first_crossover(grid, stab, heis);
}

std::vector<RqcCostModel::ScalingRow> RqcCostModel::scaling_sweep(std::span<const double> p_grid) {
  std::vector<ScalingRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    ScalingRow row;
    row.p = p;
    row.alpha_stab = alpha_stabilizer(p);
    row.alpha_opt = alpha_optimized(p);
    row.alpha_heis = alpha_heisenberg(p);
    rows.push_back(row);
  }
  return rows;
}

double sample_budget_log2(double t, double alpha, double delta, double epsilon) {
  if (delta <= 0.0 || epsilon <= 0.0 || epsilon >= 1.0) {
    throw std::invalid_argument("need delta > 0 and 0 < epsilon < 1");
  }
  return alpha * t + std::log2((2.0 / (delta * delta)) * std::log(2.0 / epsilon));
}

double sample_budget(double t, double alpha, double delta, double epsilon) {
  double log2_n = sample_budget_log2(t, alpha, delta, epsilon);
  if (log2_n > 1000.0) {
    throw std::overflow_error("sample budget exceeds double range; use sample_budget_log2");
  }
  return std::exp2(log2_n);
}

}  // namespace qpsim
