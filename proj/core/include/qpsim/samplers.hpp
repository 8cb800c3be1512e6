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

#ifndef QPSIM_SAMPLERS_HPP
#define QPSIM_SAMPLERS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "qpsim/basis.hpp"
#include "qpsim/channels.hpp"
#include "qpsim/rom.hpp"
#include "qpsim/tableau.hpp"

namespace qpsim {

/// ceil(l1^2 * (2/delta^2) * ln(2/epsilon)): shots for additive error delta
/// with confidence 1 - epsilon.
uint64_t hoeffding_shots(double l1, double delta, double epsilon);

struct HoeffdingSpec {
  double delta = 0.0;
  double epsilon = 0.0;
  uint64_t required_shots = 0;
};

struct EstimatorResult {
  double mean = 0.0;
  uint64_t shots = 0;
  double l1_total = 1.0;
  HoeffdingSpec hoeffding;
  uint64_t seed = 0;
};

/// One sampled resource block: a decomposition over a stabilizer basis,
/// occupying `width` consecutive ancilla qubits starting at `first_ancilla`.
struct ResourceBlock {
  std::shared_ptr<const StabilizerBasis> basis;
  QuasiDecomposition decomposition;
  int first_ancilla = 0;

  int width() const { return basis->n; }
};

/// A Clifford+T circuit after gadgetization: data qubits come first, then the
/// ancilla register holding the sampled resource states. Blocks must tile the
/// ancillas in order.
struct GadgetizedCircuit {
  int n_data = 0;
  int t_ancilla = 0;
  std::vector<CliffordOp> clifford_ops;
  PauliString observable;  // width n_data
  std::vector<ResourceBlock> resources;
};

EstimatorResult stabilizer_sampling_estimate(const GadgetizedCircuit& circuit, uint64_t shots,
                                             uint64_t seed, int threads = 1);

/// One (channel, qubit set) step; the PTM is local to `qubits` with
/// qubits[k] mapped to local digit k.
struct ChannelStep {
  Ptm ptm;
  std::vector<int> qubits;
};

struct HeisenbergCircuit {
  int n = 0;
  std::vector<SingleQubitState> initial;
  std::vector<ChannelStep> channels;  // application (Schrodinger) order
  PauliString observable;             // width n
};

EstimatorResult heisenberg_estimate(const HeisenbergCircuit& circuit, uint64_t shots,
                                    uint64_t seed, int threads = 1);

/// D(A) * prod_i D(Lambda_i^dagger): the l1 weight entering the Hoeffding
/// budget for Heisenberg propagation.
double heisenberg_l1_bound(const HeisenbergCircuit& circuit);

}  // namespace qpsim

#endif  // QPSIM_SAMPLERS_HPP
