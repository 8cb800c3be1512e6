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

#include "qpsim/io.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qpsim {

using nlohmann::json;

json decomposition_to_json(const QuasiDecomposition& d) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = d.n;
  j["basis_tag"] = d.basis_tag;
  j["state_indices"] = d.state_indices;
  j["coefficients"] = d.coefficients;
  j["l1"] = d.l1;
  j["residual"] = d.residual;
  return j;
}

QuasiDecomposition decomposition_from_json(const json& j) {
  QuasiDecomposition d;
  d.n = j.at("n").get<int>();
  d.basis_tag = j.at("basis_tag").get<std::string>();
  d.state_indices = j.at("state_indices").get<std::vector<int32_t>>();
  d.coefficients = j.at("coefficients").get<std::vector<double>>();
  d.l1 = j.at("l1").get<double>();
  d.residual = j.at("residual").get<double>();
  if (d.state_indices.size() != d.coefficients.size()) {
    throw std::invalid_argument("decomposition arrays disagree in length");
  }
  return d;
}

json resource_state_to_json(const ResourceState& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = r.num_qubits();
  j["name"] = r.name;
  j["t_qubits"] = r.t_qubits;
  std::vector<uint32_t> labels;
  std::vector<double> values;
  for (PauliLabel l = 0; l < r.vector.size(); ++l) {
    if (r.vector[l] != 0.0) {
      labels.push_back(l);
      values.push_back(r.vector[l]);
    }
  }
  j["labels"] = labels;
  j["values"] = values;
  return j;
}

ResourceState resource_state_from_json(const json& j) {
  ResourceState r;
  int n = j.at("n").get<int>();
  r.vector = PauliVector(n);
  auto labels = j.at("labels").get<std::vector<uint32_t>>();
  auto values = j.at("values").get<std::vector<double>>();
  if (labels.size() != values.size()) {
    throw std::invalid_argument("resource state arrays disagree in length");
  }
  for (size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] >= r.vector.size()) throw std::invalid_argument("label out of range");
    r.vector[labels[k]] = values[k];
  }
  r.t_qubits = j.value("t_qubits", std::vector<int>{});
  r.name = j.value("name", std::string{});
  return r;
}

json estimator_result_to_json(const EstimatorResult& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["mean"] = r.mean;
  j["shots"] = r.shots;
  j["l1_total"] = r.l1_total;
  j["seed"] = r.seed;
  j["hoeffding"] = {{"delta", r.hoeffding.delta},
                    {"epsilon", r.hoeffding.epsilon},
                    {"required_shots", r.hoeffding.required_shots}};
  return j;
}

Ptm ptm_from_channel_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "dephasing") return Ptm::dephasing(j.at("p").get<double>());
  if (kind == "depo1") return Ptm::depo1(j.at("p").get<double>());
  if (kind == "depo2") return Ptm::depo2(j.at("p").get<double>());
  if (kind == "pauli") {
    return Ptm::pauli_noise(j.at("px").get<double>(), j.at("py").get<double>(),
                            j.at("pz").get<double>());
  }
  if (kind == "gate") {
    Gate g = gate_from_name(j.at("gate").get<std::string>());
    return Ptm::of_gate(g, j.value("theta", 0.0));
  }
  throw std::invalid_argument("unknown channel kind: " + kind);
}

namespace {

std::vector<CliffordOp> clifford_ops_from_json(const json& ops) {
  std::vector<CliffordOp> out;
  for (const auto& op : ops) {
    CliffordOp c;
    c.gate = gate_from_name(op.at("gate").get<std::string>());
    c.qubits = op.at("qubits").get<std::vector<int>>();
    if (!is_clifford(c.gate)) {
      throw std::invalid_argument("gadgetized circuits may only contain Clifford gates");
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

GadgetizedCircuit gadgetized_circuit_from_json(const json& j, const std::string& cache_dir) {
  GadgetizedCircuit c;
  c.n_data = j.at("n_data").get<int>();
  c.t_ancilla = j.at("t_ancilla").get<int>();
  c.clifford_ops = clifford_ops_from_json(j.at("clifford_ops"));
  c.observable = PauliString::parse(j.at("observable").get<std::string>());

  int next_ancilla = 0;
  for (const auto& res : j.at("resources")) {
    ResourceBlock block;
    block.first_ancilla = next_ancilla;
    std::string kind = res.at("kind").get<std::string>();
    std::shared_ptr<StabilizerBasis> basis;
    PauliVector target;
    if (kind == "t" || kind == "rotation") {
      double theta = kind == "t" ? std::numbers::pi / 4.0 : res.at("theta").get<double>();
      target = teleport_diagonal_gate(theta).vector;
      basis = std::make_shared<StabilizerBasis>(full_stabilizer_basis(1));
    } else if (kind == "dephased") {
      target = push_dephasing(res.at("theta").get<double>(), res.at("p").get<double>()).vector;
      basis = std::make_shared<StabilizerBasis>(full_stabilizer_basis(1));
    } else if (kind == "teleported") {
      double theta = res.value("theta", std::numbers::pi / 4.0);
      PauliChannel noise = res.contains("px")
                               ? PauliChannel::pauli_rates(res.at("px").get<double>(),
                                                           res.at("py").get<double>(),
                                                           res.at("pz").get<double>())
                               : PauliChannel::depolarizing1(res.at("p").get<double>());
      target = noise_teleport(theta, noise).noisy().vector;
      basis = std::make_shared<StabilizerBasis>(full_stabilizer_basis(2));
    } else if (kind == "decomposition") {
      json dj = json::parse(read_text_file(res.at("path").get<std::string>()));
      block.decomposition = decomposition_from_json(dj);
      basis = std::make_shared<StabilizerBasis>(basis_from_tag(block.decomposition.basis_tag));
      block.basis = basis;
      next_ancilla += block.width();
      c.resources.push_back(std::move(block));
      continue;
    } else {
      throw std::invalid_argument("unknown resource kind: " + kind);
    }
    RomOptions opt;
    opt.cache_dir = cache_dir;
    block.decomposition = rom(target, *basis, opt);
    block.basis = basis;
    next_ancilla += block.width();
    c.resources.push_back(std::move(block));
  }
  return c;
}

HeisenbergCircuit heisenberg_circuit_from_json(const json& j) {
  HeisenbergCircuit c;
  c.n = j.at("n").get<int>();
  for (const auto& token : j.at("initial")) {
    c.initial.push_back(single_state_from_token(token.get<std::string>()));
  }
  for (const auto& step : j.at("channels")) {
    ChannelStep s;
    s.ptm = ptm_from_channel_json(step);
    s.qubits = step.at("qubits").get<std::vector<int>>();
    c.channels.push_back(std::move(s));
  }
  c.observable = PauliString::parse(j.at("observable").get<std::string>());
  return c;
}

std::string ptm_to_csv(const Ptm& ptm) {
  std::ostringstream out;
  out << "# schema_version," << kSchemaVersion << "\n";
  const Eigen::MatrixXd& m = ptm.matrix();
  char buf[32];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
      out << buf << (c + 1 == m.cols() ? "\n" : ",");
    }
  }
  return out.str();
}

std::string decomposition_cache_key(const PauliVector& target, const std::string& basis_tag) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (char ch : basis_tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  for (PauliLabel l = 0; l < target.size(); ++l) {
    if (std::abs(target[l]) < 1e-13) continue;
    mix(l);
    mix(static_cast<uint64_t>(llround(target[l] * 1e10)));
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<QuasiDecomposition> load_cached_decomposition(const std::string& cache_dir,
                                                            const std::string& key) {
  std::filesystem::path path = std::filesystem::path(cache_dir) / (key + ".json");
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    return decomposition_from_json(json::parse(read_text_file(path.string())));
  } catch (const std::exception&) {
    return std::nullopt;  // damaged cache entries are treated as misses
  }
}

void store_cached_decomposition(const std::string& cache_dir, const std::string& key,
                                const QuasiDecomposition& d) {
  std::filesystem::path dir(cache_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path final_path = dir / (key + ".json");
  std::filesystem::path tmp_path =
      dir / (key + ".tmp." + std::to_string(::getpid()) + ".json");
  write_text_file(tmp_path.string(), decomposition_to_json(d).dump(2));
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace qpsim
