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

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chernsim/common.hpp"
#include "chernsim/models.hpp"
#include "chernsim/oracle.hpp"
#include "chernsim/readout.hpp"

namespace chernsim::pipeline {

using json = nlohmann::json;

/// Ground-state degeneracy away from momentum space (spin chains).
class DegeneracyError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One run's configuration; every field is echoed into the output record so
/// a run can be reproduced from its own file.
struct RunConfig {
  std::string command = "flux";

  // model
  std::string model = "qwz";
  double u = 1.0;                               // qwz
  double mass = 0.0, phi = 0.0, t1 = 1.0, t2 = 1.0;  // haldane

  // plaquette pipeline
  int grid_n = 15;
  int steps_per_link = 2;
  double total_time = 10.0;
  std::string sample_point = "midpoint";  // or "left"

  // execution
  std::string backend = "oracle";  // oracle|statevector|statevector+shots|mps|noisy
  std::uint64_t shots = 8192;
  int chi_max = 60;
  double cutoff = 1e-12;
  std::uint64_t seed = 12345;
  int repeats = 1;
  double noise_p1 = 1.0 - 0.996;  // used by the noisy backend
  double noise_p2 = 1.0 - 0.961;
  double readout_flip_p = 0.0;

  // output
  std::string zone = "first";  // or "extended"
  int zone_factor = 2;
  int threads = 0;  // 0: CHERNSIM_THREADS env var, then hardware concurrency

  // wannier pipeline
  int n_k = 100;
  int qpe_m = 11;
  int qpe_m_meas = 9;
  int n_ky = 16;
  double density_eps = 0.1;
  int density_grid = 256;
  bool full_double_loop = false;  // force the double loop instead of the mirror split

  void validate() const;  // throws ConfigError
  std::unique_ptr<BlochModel> make_model() const;
  adiabatic::SamplePoint sampling() const;
  int resolve_threads() const;
};

struct FluxRecord {
  RunConfig config;
  oracle::FluxGrid grid;            // first-zone grid of the last repeat
  std::vector<double> chern_runs;   // one estimate per repeat
  double chern_real = 0.0;          // mean over repeats
  int chern_int = 0;
  double spread = 0.0;              // max - min over repeats
  double wall_time_s = 0.0;
};

struct SweepPoint {
  double value = 0.0;
  std::optional<double> chern_real;
  std::optional<int> chern_int;
  double spread = 0.0;
  std::string error;  // empty on success
};

struct SweepRecord {
  RunConfig config;
  std::string parameter;
  std::vector<SweepPoint> points;
  double wall_time_s = 0.0;
};

struct PhaseDiagramRecord {
  RunConfig config;
  std::vector<double> mass_values;
  std::vector<double> phi_values;
  std::vector<std::vector<double>> chern_real;  // [mass][phi]
  std::vector<std::vector<int>> chern_int;
  std::vector<std::vector<std::string>> errors;
  double wall_time_s = 0.0;
};

struct WannierRecord {
  RunConfig config;
  oracle::WannierTrace trace;
  std::vector<double> density_x;
  std::vector<std::vector<double>> density_rows;  // one row per ky
  double wall_time_s = 0.0;
};

struct HeisenbergConfig {
  int n_sites = 4;
  double coupling = 1.0;
  double twist_coupling = 1.0;
  int twisted_link = 0;
  bool periodic = false;
  int n_theta = 100;
  std::uint64_t seed = 12345;
};

struct HeisenbergRecord {
  HeisenbergConfig config;
  double gamma = 0.0;
  double residual = 0.0;  // distance to the nearest of {0, pi} (mod 2pi)
  double quantized = 0.0;  // the nearest of {0, pi}
  double wall_time_s = 0.0;
};

/// Berry flux through one plaquette read out through the configured circuit
/// backend (exposed for tests and bindings).
double circuit_plaquette_flux(const BlochModel& model, const Vector2d& corner, double dk,
                              const RunConfig& config, std::uint64_t seed);

FluxRecord cmd_flux(const RunConfig& config);
SweepRecord cmd_sweep(const RunConfig& config, const std::string& parameter, double from,
                      double to, int points);
PhaseDiagramRecord cmd_phase_diagram(const RunConfig& config, double mass_from, double mass_to,
                                     int mass_points, double phi_from, double phi_to,
                                     int phi_points);
WannierRecord cmd_wannier(const RunConfig& config);
HeisenbergRecord cmd_heisenberg(const HeisenbergConfig& config);

/// Canonical JSON documents. Timing is the one field that cannot be
/// bit-stable; drop it for byte-comparisons.
json to_json(const FluxRecord& r, bool include_timing = true);
json to_json(const SweepRecord& r, bool include_timing = true);
json to_json(const PhaseDiagramRecord& r, bool include_timing = true);
json to_json(const WannierRecord& r, bool include_timing = true);
json to_json(const HeisenbergRecord& r, bool include_timing = true);
json config_to_json(const RunConfig& c);
RunConfig config_from_json(const json& j);

/// CSV exports (plot-friendly columns).
std::string to_csv(const FluxRecord& r);
std::string to_csv(const SweepRecord& r);
std::string to_csv(const PhaseDiagramRecord& r);
std::string to_csv(const WannierRecord& r);

/// Index-ordered parallel map: results are independent of the worker count.
void parallel_for(int n_tasks, int workers, const std::function<void(int)>& fn);

/// Tile the first-zone flux grid periodically (factor x factor copies
/// centered on the origin) for extended-zone output.
std::vector<std::vector<double>> tile_extended(const oracle::FluxGrid& grid, int factor);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chernsim::pipeline
