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

#ifndef QPSIM_IO_HPP
#define QPSIM_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "qpsim/channels.hpp"
#include "qpsim/gadgets.hpp"
#include "qpsim/rom.hpp"
#include "qpsim/samplers.hpp"

namespace qpsim {

inline constexpr int kSchemaVersion = 1;

nlohmann::json decomposition_to_json(const QuasiDecomposition& d);
QuasiDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json resource_state_to_json(const ResourceState& r);
ResourceState resource_state_from_json(const nlohmann::json& j);

nlohmann::json estimator_result_to_json(const EstimatorResult& r);

/// {kind, params...} channel specs: dephasing, depo1, depo2, pauli, gate.
Ptm ptm_from_channel_json(const nlohmann::json& j);

/// Circuit files for the `simulate` subcommand; `type` selects between the
/// gadgetized stabilizer form and the Heisenberg channel list.
GadgetizedCircuit gadgetized_circuit_from_json(const nlohmann::json& j, const std::string& cache_dir);
HeisenbergCircuit heisenberg_circuit_from_json(const nlohmann::json& j);

std::string ptm_to_csv(const Ptm& ptm);

/// Cache key for a decomposition: hash of the basis tag and the rounded
/// target coefficients.
std::string decomposition_cache_key(const PauliVector& target, const std::string& basis_tag);
std::optional<QuasiDecomposition> load_cached_decomposition(const std::string& cache_dir,
                                                            const std::string& key);
/// Atomic (write-then-rename) store, safe under concurrent writers.
void store_cached_decomposition(const std::string& cache_dir, const std::string& key,
                                const QuasiDecomposition& d);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace qpsim

#endif  // QPSIM_IO_HPP
