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

// Command-line front end: quantifies and runs sampling-based simulations of
// noisy Clifford+T circuits. See README.md for the file formats.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "qpsim/basis.hpp"
#include "qpsim/channels.hpp"
#include "qpsim/dense.hpp"
#include "qpsim/gadgets.hpp"
#include "qpsim/io.hpp"
#include "qpsim/rom.hpp"
#include "qpsim/rqc.hpp"
#include "qpsim/samplers.hpp"

namespace {

using nlohmann::json;
using namespace qpsim;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitInfeasible = 3;

struct GridSpec {
  double start = 0.0, stop = 0.0, step = 0.01;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &g.start, &g.stop, &g.step) != 3 || g.step <= 0) {
    throw CLI::ValidationError("grid", "expected start:stop:step with step > 0");
  }
  return g;
}

std::vector<double> grid_points(const GridSpec& g) {
  std::vector<double> pts;
  for (int k = 0;; ++k) {
    double v = g.start + k * g.step;
    if (v > g.stop + 1e-12) break;
    pts.push_back(v);
  }
  return pts;
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(out_path, payload);
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct CommonOpts {
  std::string cache_dir;
  int threads = 1;
};

ResourceState named_state(const std::string& name, double theta, int copies) {
  ResourceState base;
  if (name == "T") {
    base = teleport_diagonal_gate(std::numbers::pi / 4.0);
    base.name = "T";
  } else if (name == "plus") {
    base = teleport_diagonal_gate(0.0);
    base.name = "plus";
    base.t_qubits.clear();
  } else if (name == "rotation") {
    base = teleport_diagonal_gate(theta);
  } else {
    throw CLI::ValidationError("--state", "expected T, plus or rotation");
  }
  ResourceState out = base;
  for (int k = 1; k < copies; ++k) out = out.tensor(base);
  return out;
}

int run_verify();

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling-based simulation costs of noisy Clifford+T circuits"};
  app.require_subcommand(1);

  CommonOpts common;
  const char* env_cache = std::getenv("QPSIM_CACHE_DIR");
  if (env_cache != nullptr) common.cache_dir = env_cache;
  app.add_option("--cache-dir", common.cache_dir,
                 "Decomposition cache directory (default: $QPSIM_CACHE_DIR)");
  app.add_option("--threads", common.threads, "Worker threads for sampling")
      ->check(CLI::PositiveNumber);

  // --- rom ---------------------------------------------------------------
  auto* rom_cmd = app.add_subcommand("rom", "Robustness of magic of a resource state");
  std::string rom_state = "T", rom_target_file, rom_basis = "full", rom_out, rom_sweep;
  std::string rom_theta_grid = "0:1.5708:0.0785", rom_p_grid = "0:0.5:0.05";
  int rom_copies = 1;
  double rom_theta = std::numbers::pi / 4.0;
  rom_cmd->add_option("--state", rom_state, "T | plus | rotation");
  rom_cmd->add_option("--theta", rom_theta, "Rotation angle for --state rotation");
  rom_cmd->add_option("--copies", rom_copies, "Tensor copies of the state")->check(CLI::PositiveNumber);
  rom_cmd->add_option("--basis", rom_basis, "full | reduced");
  rom_cmd->add_option("--target-file", rom_target_file, "Resource-state JSON instead of --state");
  rom_cmd->add_option("--sweep", rom_sweep, "dephased-rotation: ROM over a theta x p grid (CSV)");
  rom_cmd->add_option("--theta-grid", rom_theta_grid, "start:stop:step for --sweep");
  rom_cmd->add_option("--p-grid", rom_p_grid, "start:stop:step for --sweep");
  rom_cmd->add_option("--out", rom_out, "Output path (default stdout)");

  // --- basis -------------------------------------------------------------
  auto* basis_cmd = app.add_subcommand("basis", "Stabilizer decomposition bases");
  int basis_n = 1;
  std::string basis_kind = "full", basis_out;
  std::vector<int> basis_t_qubits;
  bool basis_dump = false;
  basis_cmd->add_option("--n", basis_n, "Qubit count")->required();
  basis_cmd->add_option("--kind", basis_kind, "full | reduced");
  basis_cmd->add_option("--t-qubits", basis_t_qubits, "T-carrying qubits for --kind reduced");
  basis_cmd->add_flag("--dump", basis_dump, "Include every state's generators");
  basis_cmd->add_option("--out", basis_out, "Output path (default stdout)");

  // --- channel-norm ------------------------------------------------------
  auto* norm_cmd = app.add_subcommand("channel-norm", "Channel stabilizer norms");
  std::string norm_gate, norm_noise, norm_file, norm_out, norm_ptm_csv;
  double norm_theta = 0.0;
  int norm_unit = 0;
  double norm_p1 = 0.0, norm_p2 = 0.0;
  norm_cmd->add_option("--gate", norm_gate, "Named gate (H, S, T, RotZ, ...)");
  norm_cmd->add_option("--theta", norm_theta, "Angle for --gate RotZ");
  norm_cmd->add_option("--noise", norm_noise, "dephasing:p | depo1:p | depo2:p | pauli:px,py,pz");
  norm_cmd->add_option("--unit", norm_unit, "Unit cell kind (2 or 3)");
  norm_cmd->add_option("--p1", norm_p1, "One-qubit depolarizing rate for --unit");
  norm_cmd->add_option("--p2", norm_p2, "Two-qubit depolarizing rate for --unit");
  norm_cmd->add_option("--file", norm_file, "Channel JSON file");
  norm_cmd->add_option("--export-ptm-csv", norm_ptm_csv, "Also write the PTM as CSV");
  norm_cmd->add_option("--out", norm_out, "Output path (default stdout)");

  // --- gadget ------------------------------------------------------------
  auto* gadget_cmd = app.add_subcommand("gadget", "Build gadget resource states");
  std::string gadget_kind, gadget_out;
  double gadget_theta = std::numbers::pi / 4.0, gadget_p = 0.0;
  int gadget_fold = 1, gadget_copies = 1;
  gadget_cmd->add_option("--kind", gadget_kind,
                         "rotation | dephased | teleported | fused-t | unit2 | unit3")
      ->required();
  gadget_cmd->add_option("--theta", gadget_theta, "Rotation angle");
  gadget_cmd->add_option("--p", gadget_p, "Depolarizing / dephasing rate");
  gadget_cmd->add_option("--fold", gadget_fold, "Noise folds for fused-t (1 or 2)");
  gadget_cmd->add_option("--copies", gadget_copies, "Tensor copies")->check(CLI::PositiveNumber);
  gadget_cmd->add_option("--out", gadget_out, "Output path (default stdout)");

  // --- simulate ----------------------------------------------------------
  auto* sim_cmd = app.add_subcommand("simulate", "Run a sampling estimator on a circuit JSON");
  std::string sim_circuit, sim_out;
  uint64_t sim_shots = 0, sim_seed = 1;
  double sim_delta = 0.0, sim_epsilon = 0.05;
  sim_cmd->add_option("--circuit", sim_circuit, "Circuit JSON path")->required();
  sim_cmd->add_option("--shots", sim_shots, "Shot count (or use --delta/--epsilon)");
  sim_cmd->add_option("--delta", sim_delta, "Additive error target");
  sim_cmd->add_option("--epsilon", sim_epsilon, "Failure probability");
  sim_cmd->add_option("--seed", sim_seed, "RNG seed");
  sim_cmd->add_option("--out", sim_out, "Output path (default stdout)");

  // --- compare-units -----------------------------------------------------
  auto* units_cmd = app.add_subcommand("compare-units", "Per-unit-cell costs across noise rates");
  std::string units_grid = "0:0.2:0.01", units_out, units_crossover_out;
  units_cmd->add_option("--p-grid", units_grid, "start:stop:step");
  units_cmd->add_option("--out", units_out, "CSV output path (default stdout)");
  units_cmd->add_option("--crossover-out", units_crossover_out, "Crossover summary JSON path");

  // --- rqc-costs ---------------------------------------------------------
  auto* rqc_cmd = app.add_subcommand("rqc-costs", "Aggregate costs for a random-circuit spec");
  int rqc_rows = 4, rqc_cols = 4, rqc_cycles = 8;
  uint64_t rqc_seed = 1;
  std::string rqc_grid = "0:0.2:0.05", rqc_out;
  rqc_cmd->add_option("--rows", rqc_rows, "Lattice rows");
  rqc_cmd->add_option("--cols", rqc_cols, "Lattice columns");
  rqc_cmd->add_option("--cycles", rqc_cycles, "Cycles");
  rqc_cmd->add_option("--seed", rqc_seed, "Gate-draw seed");
  rqc_cmd->add_option("--p-grid", rqc_grid, "start:stop:step depolarizing rates");
  rqc_cmd->add_option("--out", rqc_out, "CSV output path (default stdout)");

  // --- scaling -----------------------------------------------------------
  auto* scaling_cmd = app.add_subcommand("scaling", "Cost exponents alpha over a noise grid");
  std::string scaling_grid = "0:0.2:0.01", scaling_out;
  scaling_cmd->add_option("--p-grid", scaling_grid, "start:stop:step");
  scaling_cmd->add_option("--out", scaling_out, "CSV output path (default stdout)");

  // --- verify ------------------------------------------------------------
  app.add_subcommand("verify", "Run the dense-oracle invariant suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rom_cmd->parsed()) {
      if (rom_sweep == "dephased-rotation") {
        std::ostringstream csv;
        csv << "schema_version," << kSchemaVersion << "\ntheta,p,rom\n";
        for (double p : grid_points(parse_grid(rom_p_grid))) {
          for (double theta : grid_points(parse_grid(rom_theta_grid))) {
            csv << format_double(theta) << ',' << format_double(p) << ','
                << format_double(rom_dephased_rotation(theta, p)) << '\n';
          }
        }
        emit(rom_out, csv.str());
        return 0;
      }
      ResourceState target;
      if (!rom_target_file.empty()) {
        target = resource_state_from_json(json::parse(read_text_file(rom_target_file)));
      } else {
        target = named_state(rom_state, rom_theta, rom_copies);
      }
      StabilizerBasis basis = rom_basis == "reduced"
                                  ? reduced_pair_basis(target.num_qubits(), target.t_qubits)
                                  : full_stabilizer_basis(target.num_qubits());
      RomOptions opt;
      opt.cache_dir = common.cache_dir;
      QuasiDecomposition d = rom(target.vector, basis, opt);
      json j = decomposition_to_json(d);
      j["state"] = target.name;
      emit(rom_out, j.dump(2));
      return 0;
    }

    if (basis_cmd->parsed()) {
      StabilizerBasis basis = basis_kind == "reduced" ? reduced_pair_basis(basis_n, basis_t_qubits)
                                                      : full_stabilizer_basis(basis_n);
      json j;
      j["schema_version"] = kSchemaVersion;
      j["n"] = basis.n;
      j["tag"] = basis.tag;
      j["count"] = basis.size();
      if (basis_dump) {
        json states = json::array();
        for (size_t idx = 0; idx < basis.size(); ++idx) {
          json gens = json::array();
          for (const auto& g : basis.columns[idx].generators) gens.push_back(g.str());
          states.push_back({{"index", idx}, {"generators", gens}});
        }
        j["states"] = states;
      }
      emit(basis_out, j.dump(2));
      return 0;
    }

    if (norm_cmd->parsed()) {
      Ptm ptm;
      std::string description;
      if (!norm_gate.empty()) {
        ptm = Ptm::of_gate(gate_from_name(norm_gate), norm_theta);
        description = norm_gate;
      } else if (!norm_noise.empty()) {
        double p = 0, px = 0, py = 0, pz = 0;
        char kind[16] = {0};
        if (std::sscanf(norm_noise.c_str(), "pauli:%lf,%lf,%lf", &px, &py, &pz) == 3) {
          ptm = Ptm::pauli_noise(px, py, pz);
        } else if (std::sscanf(norm_noise.c_str(), "%15[a-z0-9]:%lf", kind, &p) == 2) {
          json spec = {{"kind", kind}, {"p", p}};
          ptm = ptm_from_channel_json(spec);
        } else {
          throw CLI::ValidationError("--noise", "unrecognized channel spec");
        }
        description = norm_noise;
      } else if (norm_unit == 2 || norm_unit == 3) {
        ptm = unit_cell_ptm(norm_unit, norm_p1, norm_p2);
        description = "unit" + std::to_string(norm_unit);
      } else if (!norm_file.empty()) {
        ptm = ptm_from_channel_json(json::parse(read_text_file(norm_file)));
        description = norm_file;
      } else {
        throw CLI::ValidationError("channel-norm", "pick one of --gate/--noise/--unit/--file");
      }
      if (!norm_ptm_csv.empty()) write_text_file(norm_ptm_csv, ptm_to_csv(ptm));
      json j;
      j["schema_version"] = kSchemaVersion;
      j["channel"] = description;
      j["norm"] = channel_stabilizer_norm(ptm);
      emit(norm_out, j.dump(2));
      return 0;
    }

    if (gadget_cmd->parsed()) {
      ResourceState r;
      if (gadget_kind == "rotation") {
        r = teleport_diagonal_gate(gadget_theta);
      } else if (gadget_kind == "dephased") {
        r = push_dephasing(gadget_theta, gadget_p);
      } else if (gadget_kind == "teleported") {
        r = noise_teleport(gadget_theta, PauliChannel::depolarizing1(gadget_p)).noisy();
      } else if (gadget_kind == "fused-t") {
        r = fused_t_resource(gadget_p, gadget_fold);
      } else if (gadget_kind == "unit2" || gadget_kind == "unit3") {
        r = unit_cell_resource(gadget_kind == "unit2" ? 2 : 3, gadget_p);
      } else {
        throw CLI::ValidationError("--kind", "unknown gadget kind");
      }
      ResourceState out = r;
      for (int k = 1; k < gadget_copies; ++k) out = out.tensor(r);
      emit(gadget_out, resource_state_to_json(out).dump(2));
      return 0;
    }

    if (sim_cmd->parsed()) {
      json cj = json::parse(read_text_file(sim_circuit));
      std::string type = cj.at("type").get<std::string>();
      EstimatorResult result;
      if (type == "gadgetized") {
        GadgetizedCircuit circuit = gadgetized_circuit_from_json(cj, common.cache_dir);
        double weight = 1.0;
        for (const auto& block : circuit.resources) weight *= block.decomposition.l1;
        uint64_t shots = sim_shots;
        HoeffdingSpec spec;
        spec.epsilon = sim_epsilon;
        if (shots == 0) {
          if (sim_delta <= 0) throw CLI::ValidationError("simulate", "need --shots or --delta");
          spec.delta = sim_delta;
          spec.required_shots = hoeffding_shots(weight, sim_delta, sim_epsilon);
          shots = spec.required_shots;
        } else {
          spec.delta = weight * std::sqrt(2.0 * std::log(2.0 / sim_epsilon) / shots);
          spec.required_shots = shots;
        }
        result = stabilizer_sampling_estimate(circuit, shots, sim_seed, common.threads);
        result.hoeffding = spec;
      } else if (type == "heisenberg") {
        HeisenbergCircuit circuit = heisenberg_circuit_from_json(cj);
        double weight = heisenberg_l1_bound(circuit);
        uint64_t shots = sim_shots;
        HoeffdingSpec spec;
        spec.epsilon = sim_epsilon;
        if (shots == 0) {
          if (sim_delta <= 0) throw CLI::ValidationError("simulate", "need --shots or --delta");
          spec.delta = sim_delta;
          spec.required_shots = hoeffding_shots(weight, sim_delta, sim_epsilon);
          shots = spec.required_shots;
        } else {
          spec.delta = weight * std::sqrt(2.0 * std::log(2.0 / sim_epsilon) / shots);
          spec.required_shots = shots;
        }
        result = heisenberg_estimate(circuit, shots, sim_seed, common.threads);
        result.hoeffding = spec;
      } else {
        throw CLI::ValidationError("--circuit", "unknown circuit type: " + type);
      }
      emit(sim_out, estimator_result_to_json(result).dump(2));
      return 0;
    }

    if (units_cmd->parsed()) {
      RqcCostModel model(common.cache_dir, common.threads);
      std::ostringstream csv;
      csv << "schema_version," << kSchemaVersion
          << "\np,heis_unit2,heis_unit3,rom_unit2,rom_unit3,opt_unit2,opt_unit3\n";
      GridSpec grid = parse_grid(units_grid);
      for (double p : grid_points(grid)) {
        UnitCellNorms norms = unit_cell_norms_closed_form(p, p);
        UnitCellRoms roms = model.unit_roms(p);
        csv << format_double(p) << ',' << format_double(norms.d2) << ','
            << format_double(norms.d3) << ',' << format_double(roms.rom_unit2) << ','
            << format_double(roms.rom_unit3) << ','
            << format_double(std::sqrt(roms.rom_unit2_pair)) << ','
            << format_double(std::sqrt(roms.rom_unit3_pair)) << '\n';
      }
      emit(units_out, csv.str());
      if (!units_crossover_out.empty()) {
        json j;
        j["schema_version"] = kSchemaVersion;
        auto c2 = model.crossover(2, grid.stop, grid.step);
        auto c3 = model.crossover(3, grid.stop, grid.step);
        j["unit2_crossover"] = c2.has_value() ? json(*c2) : json(nullptr);
        j["unit3_crossover"] = c3.has_value() ? json(*c3) : json(nullptr);
        write_text_file(units_crossover_out, j.dump(2));
      }
      return 0;
    }

    if (rqc_cmd->parsed()) {
      RqcCostModel model(common.cache_dir, common.threads);
      std::ostringstream csv;
      csv << "schema_version," << kSchemaVersion << "\np,t,method,cost_log2,alpha\n";
      for (double p : grid_points(parse_grid(rqc_grid))) {
        RqcSpec spec{rqc_rows, rqc_cols, rqc_cycles, p, p, rqc_seed};
        for (const CostReport& report :
             {model.stabilizer_cost(spec, false), model.stabilizer_cost(spec, true),
              model.heisenberg_cost(spec)}) {
          csv << format_double(p) << ',' << format_double(report.t) << ',' << report.method
              << ',' << format_double(report.cost_log2) << ',' << format_double(report.alpha)
              << '\n';
        }
      }
      emit(rqc_out, csv.str());
      return 0;
    }

    if (scaling_cmd->parsed()) {
      RqcCostModel model(common.cache_dir, common.threads);
      std::vector<double> pts = grid_points(parse_grid(scaling_grid));
      std::ostringstream csv;
      csv << "schema_version," << kSchemaVersion << "\np,t,method,cost_log2,alpha\n";
      for (const auto& row : model.scaling_sweep(pts)) {
        // Rows are normalized to one T gate, so cost_log2 == alpha.
        csv << format_double(row.p) << ",1,stabilizer," << format_double(row.alpha_stab) << ','
            << format_double(row.alpha_stab) << '\n';
        csv << format_double(row.p) << ",1,optimized_stabilizer,"
            << format_double(row.alpha_opt) << ',' << format_double(row.alpha_opt) << '\n';
        csv << format_double(row.p) << ",1,heisenberg," << format_double(row.alpha_heis) << ','
            << format_double(row.alpha_heis) << '\n';
      }
      emit(scaling_out, csv.str());
      return 0;
    }

    if (app.get_subcommand("verify")->parsed()) {
      return run_verify();
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "error: infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const SolverError& e) {
    std::cerr << "error: numerical: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const CLI::Error& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}

namespace {

int run_verify() {
  int failures = 0;
  auto check = [&failures](bool ok, const std::string& name) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };

  // Teleportation gadget equals the direct rotation on a theta grid.
  {
    double worst = 0.0;
    for (double theta : {0.0, 0.3, std::numbers::pi / 4.0, 1.1, std::numbers::pi / 2.0}) {
      DenseState bell = DenseState::product_state(
          std::array{SingleQubitState::Zero, SingleQubitState::Zero});
      bell.apply_gate(Gate::H, std::array{0});
      bell.apply_gate(Gate::CNOT, std::array{0, 1});
      std::vector<std::complex<double>> amps = {
          std::numbers::sqrt2 / 2.0,
          std::numbers::sqrt2 / 2.0 * std::exp(std::complex<double>(0, theta))};
      DenseState gadget = bell.tensor(DenseState::from_ket(amps));
      gadget.apply_gate(Gate::CNOT, std::array{1, 2});
      double prob = gadget.postselect_zero(2);
      DenseState reduced = gadget.partial_trace_keep(std::array{0, 1});
      DenseState direct = DenseState::product_state(
          std::array{SingleQubitState::Zero, SingleQubitState::Zero});
      direct.apply_gate(Gate::H, std::array{0});
      direct.apply_gate(Gate::CNOT, std::array{0, 1});
      direct.apply_gate(Gate::RotZ, std::array{1}, theta);
      worst = std::max(worst, (reduced.rho() - direct.rho()).cwiseAbs().maxCoeff());
      worst = std::max(worst, std::abs(prob - 0.5));
    }
    check(worst < 1e-10, "gate teleportation matches direct rotation (dense)");
  }

  // Pauli vector round-trip.
  {
    ResourceState t2 = teleport_diagonal_gate(std::numbers::pi / 4.0)
                           .tensor(teleport_diagonal_gate(0.7));
    PauliVector again = PauliVector::of_density(t2.vector.to_density(), 2);
    double worst = 0.0;
    for (PauliLabel l = 0; l < again.size(); ++l) worst = std::max(worst, std::abs(again[l] - t2.vector[l]));
    check(worst < 1e-12, "Pauli vector density round-trip");
  }

  // PTM composition law against dense conjugation.
  {
    Ptm composed = Ptm::of_gate(Gate::H).after(Ptm::of_gate(Gate::S));
    DenseState probe = DenseState::product_state(std::array{SingleQubitState::PlusI});
    probe.apply_gate(Gate::S, std::array{0});
    probe.apply_gate(Gate::H, std::array{0});
    PauliVector via_ptm = composed.apply(
        DenseState::product_state(std::array{SingleQubitState::PlusI}).pauli_vector());
    double worst = 0.0;
    for (PauliLabel l = 0; l < 4; ++l) worst = std::max(worst, std::abs(via_ptm[l] - probe.pauli_vector()[l]));
    check(worst < 1e-12, "PTM composition matches dense evolution");
  }

  // Tableau vs dense on the full 2-qubit stabilizer set.
  {
    StabilizerBasis basis = full_stabilizer_basis(2);
    double worst = 0.0;
    for (size_t idx = 0; idx < basis.size(); idx += 7) {
      StabilizerTableau t = basis.column_tableau(static_cast<int>(idx));
      PauliVector v = t.pauli_vector();
      PauliVector expect = basis.column_vector(static_cast<int>(idx));
      for (PauliLabel l = 0; l < v.size(); ++l) worst = std::max(worst, std::abs(v[l] - expect[l]));
    }
    check(worst < 1e-12, "tableau states match their defining coefficients");
  }

  std::cout << (failures == 0 ? "verify: all checks passed\n" : "verify: FAILURES\n");
  return failures == 0 ? 0 : kExitNumerical;
}

}  // namespace
