// Copyright 2026 The chernsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chernsim/pipeline.hpp"

namespace {

using chernsim::pipeline::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitGapClosure = 3;
constexpr int kExitBackend = 4;

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& out_path,
                      std::string& csv_path) {
  cmd->add_option("--model", cfg.model, "Model: qwz or haldane")->capture_default_str();
  cmd->add_option("-u,--u", cfg.u, "QWZ on-site potential")->capture_default_str();
  cmd->add_option("-m,--mass", cfg.mass, "Haldane mass")->capture_default_str();
  cmd->add_option("--phi", cfg.phi, "Haldane next-nearest-neighbor phase (radians)")
      ->capture_default_str();
  cmd->add_option("--t1", cfg.t1, "Haldane nearest-neighbor hopping")->capture_default_str();
  cmd->add_option("--t2", cfg.t2, "Haldane next-nearest-neighbor hopping")->capture_default_str();
  cmd->add_option("-n,--grid", cfg.grid_n, "Plaquettes per side of the zone grid")
      ->capture_default_str();
  cmd->add_option("--steps-per-link", cfg.steps_per_link, "Evolution steps per plaquette link")
      ->capture_default_str();
  cmd->add_option("-T,--time", cfg.total_time, "Loop evolution time (model units)")
      ->capture_default_str();
  cmd->add_option("--sample-point", cfg.sample_point,
                  "Hamiltonian sample within each increment: midpoint or left")
      ->capture_default_str();
  cmd->add_option("--backend", cfg.backend,
                  "oracle, statevector, statevector+shots, mps or noisy")
      ->capture_default_str();
  cmd->add_option("--shots", cfg.shots, "Shots for sampling backends")->capture_default_str();
  cmd->add_option("--chi-max", cfg.chi_max, "Bond-dimension cap for the mps backend")
      ->capture_default_str();
  cmd->add_option("--cutoff", cfg.cutoff, "Singular-value cutoff for the mps backend")
      ->capture_default_str();
  cmd->add_option("--noise-p1", cfg.noise_p1, "Depolarizing probability per 1-qubit gate")
      ->capture_default_str();
  cmd->add_option("--noise-p2", cfg.noise_p2, "Depolarizing probability per 2-qubit gate")
      ->capture_default_str();
  cmd->add_option("--readout-flip", cfg.readout_flip_p, "Readout bit-flip probability")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  cmd->add_option("--repeats", cfg.repeats, "Independent repeats (spread is reported)")
      ->capture_default_str();
  cmd->add_option("--zone", cfg.zone, "Output zone: first or extended")->capture_default_str();
  cmd->add_option("--zone-factor", cfg.zone_factor, "Extended-zone tiling factor")
      ->capture_default_str();
  cmd->add_option("--threads", cfg.threads,
                  "Worker threads (0: CHERNSIM_THREADS env var, then hardware)")
      ->capture_default_str();
  cmd->add_option("-o,--out", out_path, "Write the JSON record here instead of stdout");
  cmd->add_option("--csv", csv_path, "Also write a CSV export here");
}

void emit(const chernsim::pipeline::json& doc, const std::string& out_path,
          const std::string& csv_path, const std::string& csv) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw chernsim::ConfigError("cannot open output file " + out_path);
    out << doc.dump(2) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw chernsim::ConfigError("cannot open CSV file " + csv_path);
    out << csv;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological invariants of two-dimensional band models via simulated quantum circuits"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out_path, csv_path;

  auto* flux = app.add_subcommand("flux", "Berry-flux grid and Chern number for one parameter set");
  add_common_flags(flux, cfg, out_path, csv_path);

  auto* sweep = app.add_subcommand("sweep", "Chern number along a 1D parameter sweep");
  add_common_flags(sweep, cfg, out_path, csv_path);
  std::string sweep_param = "u";
  double sweep_from = -3.0, sweep_to = 3.0;
  int sweep_points = 13;
  sweep->add_option("--param", sweep_param, "Swept parameter: u, m or phi")->capture_default_str();
  sweep->add_option("--from", sweep_from, "First value")->capture_default_str();
  sweep->add_option("--to", sweep_to, "Last value")->capture_default_str();
  sweep->add_option("--points", sweep_points, "Number of sweep points")->capture_default_str();

  auto* diagram = app.add_subcommand("phase-diagram", "Chern map over the (m, phi) plane");
  add_common_flags(diagram, cfg, out_path, csv_path);
  double m_from = -6.0, m_to = 6.0, phi_from = -chernsim::kPi, phi_to = chernsim::kPi;
  int m_points = 21, phi_points = 21;
  diagram->add_option("--m-from", m_from)->capture_default_str();
  diagram->add_option("--m-to", m_to)->capture_default_str();
  diagram->add_option("--m-points", m_points)->capture_default_str();
  diagram->add_option("--phi-from", phi_from)->capture_default_str();
  diagram->add_option("--phi-to", phi_to)->capture_default_str();
  diagram->add_option("--phi-points", phi_points)->capture_default_str();

  auto* wannier = app.add_subcommand(
      "wannier", "Hybrid Wannier centers over ky via phase estimation; winding gives the Chern number");
  add_common_flags(wannier, cfg, out_path, csv_path);
  wannier->add_option("--nk", cfg.n_k, "Momentum increments per half sweep")->capture_default_str();
  wannier->add_option("--qpe-bits", cfg.qpe_m, "Work-register size")->capture_default_str();
  wannier->add_option("--qpe-measured", cfg.qpe_m_meas, "Measured work qubits")
      ->capture_default_str();
  wannier->add_option("--ky-points", cfg.n_ky, "ky samples over the closed sweep")
      ->capture_default_str();
  wannier->add_option("--eps", cfg.density_eps, "Lorentzian broadening of the center density")
      ->capture_default_str();
  wannier->add_option("--density-grid", cfg.density_grid, "Density grid points")
      ->capture_default_str();
  wannier->add_flag("--full-double-loop", cfg.full_double_loop,
                    "Traverse the loop twice instead of using the mirror shortcut");

  auto* heis = app.add_subcommand("heisenberg",
                                  "Quantized twist Berry phase of a spin-1/2 Heisenberg chain");
  chernsim::pipeline::HeisenbergConfig hcfg;
  std::string h_out, h_csv_unused;
  heis->add_option("--sites", hcfg.n_sites, "Chain length (2..12)")->capture_default_str();
  heis->add_option("-J,--coupling", hcfg.coupling, "Uniform exchange coupling")
      ->capture_default_str();
  heis->add_option("--twist-j", hcfg.twist_coupling, "Coupling on the twisted link")
      ->capture_default_str();
  heis->add_option("--twist-link", hcfg.twisted_link, "Index of the twisted link")
      ->capture_default_str();
  heis->add_flag("--periodic", hcfg.periodic, "Periodic boundary conditions");
  heis->add_option("--ntheta", hcfg.n_theta, "Twist-angle discretization points")
      ->capture_default_str();
  heis->add_option("--seed", hcfg.seed, "Echoed into the record")->capture_default_str();
  heis->add_option("-o,--out", h_out, "Write the JSON record here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    using namespace chernsim::pipeline;
    if (flux->parsed()) {
      cfg.command = "flux";
      FluxRecord r = cmd_flux(cfg);
      emit(to_json(r), out_path, csv_path, to_csv(r));
    } else if (sweep->parsed()) {
      cfg.command = "sweep";
      SweepRecord r = cmd_sweep(cfg, sweep_param, sweep_from, sweep_to, sweep_points);
      emit(to_json(r), out_path, csv_path, to_csv(r));
    } else if (diagram->parsed()) {
      cfg.command = "phase-diagram";
      cfg.model = "haldane";
      PhaseDiagramRecord r =
          cmd_phase_diagram(cfg, m_from, m_to, m_points, phi_from, phi_to, phi_points);
      emit(to_json(r), out_path, csv_path, to_csv(r));
    } else if (wannier->parsed()) {
      cfg.command = "wannier";
      WannierRecord r = cmd_wannier(cfg);
      emit(to_json(r), out_path, csv_path, to_csv(r));
    } else if (heis->parsed()) {
      HeisenbergRecord r = cmd_heisenberg(hcfg);
      emit(to_json(r), h_out, "", "");
    }
  } catch (const chernsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const chernsim::GapClosureError& e) {
    std::cerr << "gap closure: " << e.what() << " at k = (" << e.kx() << ", " << e.ky()
              << "), gap = " << e.gap() << "\n";
    return kExitGapClosure;
  } catch (const chernsim::pipeline::DegeneracyError& e) {
    std::cerr << "degeneracy: " << e.what() << "\n";
    return kExitGapClosure;
  } catch (const chernsim::BackendError& e) {
    std::cerr << "backend failure: " << e.what() << "\n";
    return kExitBackend;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitBackend;
  }
  return kExitOk;
}
