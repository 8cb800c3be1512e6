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

#include "qpsim/samplers.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace qpsim {

namespace {

// Shots are split into fixed-size shards with derived seeds, so the estimate
// is byte-identical for any thread count.
constexpr uint64_t kShardShots = 8192;

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct Shard {
  uint64_t first = 0;
  uint64_t count = 0;
};

std::vector<Shard> make_shards(uint64_t shots) {
  std::vector<Shard> shards;
  for (uint64_t first = 0; first < shots; first += kShardShots) {
    shards.push_back({first, std::min(kShardShots, shots - first)});
  }
  return shards;
}

// Runs `worker` over shards on up to `threads` threads and sums the per-shard
// results in shard order.
double run_sharded(uint64_t shots, uint64_t seed, int threads,
                   const std::function<double(uint64_t, uint64_t)>& shard_sum) {
  std::vector<Shard> shards = make_shards(shots);
  std::vector<double> sums(shards.size(), 0.0);
  int workers = std::max(1, threads);
  if (workers == 1 || shards.size() <= 1) {
    for (size_t s = 0; s < shards.size(); ++s) {
      sums[s] = shard_sum(splitmix64(seed ^ (shards[s].first / kShardShots)), shards[s].count);
    }
  } else {
    std::atomic<size_t> next{0};
    auto consume = [&]() {
      while (true) {
        size_t s = next.fetch_add(1);
        if (s >= shards.size()) break;
        sums[s] = shard_sum(splitmix64(seed ^ (shards[s].first / kShardShots)), shards[s].count);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(consume);
    for (auto& t : pool) t.join();
  }
  double total = 0.0;
  for (double s : sums) total += s;
  return total;
}

struct SampledEntry {
  double cumulative;
  double sign;
  StabilizerTableau tableau;
};

}  // namespace

uint64_t hoeffding_shots(double l1, double delta, double epsilon) {
  if (l1 < 1.0 - 1e-12) throw std::invalid_argument("l1 weight must be >= 1");
  if (delta <= 0.0 || epsilon <= 0.0 || epsilon >= 1.0) {
    throw std::invalid_argument("need delta > 0 and 0 < epsilon < 1");
  }
  double shots = l1 * l1 * (2.0 / (delta * delta)) * std::log(2.0 / epsilon);
  return static_cast<uint64_t>(std::ceil(shots));
}

EstimatorResult stabilizer_sampling_estimate(const GadgetizedCircuit& circuit, uint64_t shots,
                                             uint64_t seed, int threads) {
  if (circuit.observable.num_qubits() != circuit.n_data) {
    throw std::invalid_argument("observable width must match the data register");
  }
  if (shots == 0) throw std::invalid_argument("need at least one shot");

  // Precompute the sampling tables: per block, cumulative |x| plus the
  // tableau and sign of each participating state.
  int covered = 0;
  double l1_total = 1.0;
  std::vector<std::vector<SampledEntry>> tables;
  for (const auto& block : circuit.resources) {
    if (block.decomposition.state_indices.empty()) {
      throw std::invalid_argument("empty decomposition block");
    }
    if (block.decomposition.residual > 1e-7) {
      throw std::invalid_argument("decomposition residual above tolerance");
    }
    if (block.first_ancilla != covered) {
      throw std::invalid_argument("resource blocks must tile the ancilla register in order");
    }
    covered += block.width();
    double l1 = block.decomposition.l1;
    l1_total *= l1;
    std::vector<SampledEntry> table;
    double acc = 0.0;
    for (size_t k = 0; k < block.decomposition.state_indices.size(); ++k) {
      double x = block.decomposition.coefficients[k];
      acc += std::abs(x) / l1;
      table.push_back({acc, x >= 0 ? 1.0 : -1.0,
                       block.basis->column_tableau(block.decomposition.state_indices[k])});
    }
    table.back().cumulative = 1.0;
    tables.push_back(std::move(table));
  }
  if (covered != circuit.t_ancilla) {
    throw std::invalid_argument("resource blocks do not cover the ancilla register");
  }

  int n_total = circuit.n_data + circuit.t_ancilla;
  PauliString wide_obs(n_total, circuit.observable.x_mask(), circuit.observable.z_mask(),
                       circuit.observable.phase_exp());
  StabilizerTableau data_block = StabilizerTableau::zero_state(circuit.n_data);
  double scale = static_cast<double>(uint64_t{1} << circuit.t_ancilla);

  auto shard_sum = [&](uint64_t shard_seed, uint64_t count) {
    std::mt19937_64 rng(shard_seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double sum = 0.0;
    for (uint64_t shot = 0; shot < count; ++shot) {
      double sign = 1.0;
      StabilizerTableau state = data_block;
      for (const auto& table : tables) {
        double u = unif(rng);
        size_t lo = 0, hi = table.size() - 1;
        while (lo < hi) {
          size_t mid = (lo + hi) / 2;
          if (table[mid].cumulative < u) lo = mid + 1; else hi = mid;
        }
        sign *= table[lo].sign;
        state = state.tensor(table[lo].tableau);
      }
      state.apply(circuit.clifford_ops);
      double weight = 1.0;
      for (int q = circuit.n_data; q < n_total && weight != 0.0; ++q) {
        weight *= state.postselect_zero(q);
      }
      if (weight == 0.0) continue;
      sum += sign * scale * weight * state.expectation(wide_obs);
    }
    return sum;
  };

  EstimatorResult result;
  result.shots = shots;
  result.seed = seed;
  result.l1_total = l1_total;
  result.mean = l1_total * run_sharded(shots, seed, threads, shard_sum) /
                static_cast<double>(shots);
  return result;
}

namespace {

// Per-step sampling table: for each local input label, the normalized CDF
// over output labels along that PTM row.
struct StepTable {
  int width;                     // qubits touched
  std::vector<int> qubits;
  std::vector<double> row_l1;    // per input label
  std::vector<std::vector<std::pair<double, int>>> cdf;  // (cumulative, output label)
  std::vector<std::vector<double>> sign;                 // per (input, output slot)
};

}  // namespace

double heisenberg_l1_bound(const HeisenbergCircuit& circuit) {
  double bound = 1.0;  // D(A) = 1 for a Pauli observable
  for (const auto& step : circuit.channels) {
    bound *= channel_stabilizer_norm(step.ptm);
  }
  return bound;
}

EstimatorResult heisenberg_estimate(const HeisenbergCircuit& circuit, uint64_t shots,
                                    uint64_t seed, int threads) {
  if (circuit.observable.num_qubits() != circuit.n) {
    throw std::invalid_argument("observable width must match the register");
  }
  if (static_cast<int>(circuit.initial.size()) != circuit.n) {
    throw std::invalid_argument("initial state width must match the register");
  }
  if (shots == 0) throw std::invalid_argument("need at least one shot");

  std::vector<StepTable> steps;
  steps.reserve(circuit.channels.size());
  for (const auto& step : circuit.channels) {
    int w = static_cast<int>(step.qubits.size());
    if (step.ptm.num_qubits() != w || w < 1 || w > 2) {
      throw std::invalid_argument("channels must act on one or two qubits");
    }
    for (int q : step.qubits) {
      if (q < 0 || q >= circuit.n) throw std::invalid_argument("channel qubit out of range");
    }
    StepTable table;
    table.width = w;
    table.qubits = step.qubits;
    int labels = 1 << (2 * w);
    table.row_l1.resize(labels);
    table.cdf.resize(labels);
    table.sign.resize(labels);
    const Eigen::MatrixXd& r = step.ptm.matrix();
    for (int in = 0; in < labels; ++in) {
      double l1 = 0.0;
      for (int out = 0; out < labels; ++out) l1 += std::abs(r(in, out));
      table.row_l1[in] = l1;
      if (l1 <= 1e-15) continue;
      double acc = 0.0;
      for (int out = 0; out < labels; ++out) {
        double v = r(in, out);
        if (std::abs(v) < 1e-15) continue;
        acc += std::abs(v) / l1;
        table.cdf[in].emplace_back(acc, out);
        table.sign[in].push_back(v >= 0 ? 1.0 : -1.0);
      }
      table.cdf[in].back().first = 1.0;
    }
    steps.push_back(std::move(table));
  }

  const PauliLabel obs_label = circuit.observable.label();
  const double obs_sign = circuit.observable.sign();
  auto shard_sum = [&](uint64_t shard_seed, uint64_t count) {
    std::mt19937_64 rng(shard_seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<int> digits(circuit.n);
    double sum = 0.0;
    for (uint64_t shot = 0; shot < count; ++shot) {
      for (int q = 0; q < circuit.n; ++q) digits[q] = label_digit(obs_label, q);
      double mult = obs_sign;
      // Adjoint order: last channel first.
      for (size_t s = steps.size(); s-- > 0 && mult != 0.0;) {
        const StepTable& table = steps[s];
        int in = 0;
        for (int k = 0; k < table.width; ++k) in |= digits[table.qubits[k]] << (2 * k);
        double l1 = table.row_l1[in];
        if (l1 <= 1e-15) {
          mult = 0.0;  // trace-annihilated trajectory; cannot occur for TP channels
          break;
        }
        const auto& cdf = table.cdf[in];
        double u = unif(rng);
        size_t lo = 0, hi = cdf.size() - 1;
        while (lo < hi) {
          size_t mid = (lo + hi) / 2;
          if (cdf[mid].first < u) lo = mid + 1; else hi = mid;
        }
        mult *= table.sign[in][lo] * l1;
        int out = cdf[lo].second;
        for (int k = 0; k < table.width; ++k) digits[table.qubits[k]] = (out >> (2 * k)) & 3;
      }
      if (mult == 0.0) continue;
      double overlap = 1.0;
      for (int q = 0; q < circuit.n && overlap != 0.0; ++q) {
        overlap *= single_state_pauli_expect(circuit.initial[q], digits[q]);
      }
      sum += mult * overlap;
    }
    return sum;
  };

  EstimatorResult result;
  result.shots = shots;
  result.seed = seed;
  result.l1_total = heisenberg_l1_bound(circuit);
  result.mean = run_sharded(shots, seed, threads, shard_sum) / static_cast<double>(shots);
  return result;
}

}  // namespace qpsim
