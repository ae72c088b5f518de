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

#include "chernsim/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "chernsim/adiabatic.hpp"
#include "chernsim/rng.hpp"

namespace chernsim::pipeline {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool is_circuit_backend(const std::string& backend) {
  return backend == "statevector" || backend == "statevector+shots" ||
         backend == "statevector-shots" || backend == "mps" || backend == "noisy";
}

readout::Execution make_execution(const RunConfig& c, std::uint64_t seed) {
  if (c.backend == "statevector") return readout::Execution::statevector();
  if (c.backend == "statevector+shots" || c.backend == "statevector-shots") {
    return readout::Execution::statevector_shots(c.shots, seed);
  }
  if (c.backend == "mps") return readout::Execution::mps(c.chi_max, 0, seed);
  if (c.backend == "noisy") {
    NoiseSpec noise;
    noise.depolarizing_p1 = c.noise_p1;
    noise.depolarizing_p2 = c.noise_p2;
    noise.readout_flip_p = c.readout_flip_p;
    noise.seed = seed;
    return readout::Execution::noisy(noise, c.shots);
  }
  throw ConfigError("unknown circuit backend '" + c.backend + "'");
}

double quantization_residual(double gamma, double* nearest) {
  const double to_zero = std::abs(std::remainder(gamma, 2.0 * kPi));
  const double to_pi = std::abs(std::remainder(gamma - kPi, 2.0 * kPi));
  if (to_zero <= to_pi) {
    if (nearest) *nearest = 0.0;
    return to_zero;
  }
  if (nearest) *nearest = kPi;
  return to_pi;
}

}  // namespace

void RunConfig::validate() const {
  if (model != "qwz" && model != "haldane") {
    throw ConfigError("unknown model '" + model + "' (expected qwz or haldane)");
  }
  if (backend != "oracle" && !is_circuit_backend(backend)) {
    throw ConfigError("unknown backend '" + backend + "'");
  }
  if (grid_n < 1) throw ConfigError("grid must have at least 1 plaquette per side");
  if (steps_per_link < 1) throw ConfigError("steps-per-link must be >= 1");
  if (!(total_time > 0.0)) throw ConfigError("total time must be > 0");
  if (sample_point != "midpoint" && sample_point != "left") {
    throw ConfigError("sample-point must be 'midpoint' or 'left'");
  }
  const bool sampling_backend =
      backend == "statevector+shots" || backend == "statevector-shots" || backend == "noisy";
  if (sampling_backend && shots < 1) throw ConfigError("sampling backends need shots >= 1");
  if (backend == "mps" && chi_max < 1) throw ConfigError("mps backend needs chi-max >= 1");
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  if (zone != "first" && zone != "extended") throw ConfigError("zone must be first or extended");
  if (zone_factor < 1) throw ConfigError("zone-factor must be >= 1");
  if (n_k < 2) throw ConfigError("nk must be >= 2");
  if (qpe_m < 1 || qpe_m_meas < 1 || qpe_m_meas > qpe_m) {
    throw ConfigError("need qpe-bits >= qpe-measured >= 1");
  }
  if (n_ky < 8) throw ConfigError("ky-points must be >= 8 for winding extraction");
  if (!(density_eps > 0.0)) throw ConfigError("density eps must be > 0");
  if (noise_p1 < 0 || noise_p1 >= 1 || noise_p2 < 0 || noise_p2 >= 1 || readout_flip_p < 0 ||
      readout_flip_p >= 1) {
    throw ConfigError("noise probabilities must lie in [0, 1)");
  }
}

std::unique_ptr<BlochModel> RunConfig::make_model() const {
  if (model == "qwz") return std::make_unique<QwzModel>(u);
  if (model == "haldane") return std::make_unique<HaldaneModel>(mass, phi, t1, t2);
  throw ConfigError("unknown model '" + model + "'");
}

adiabatic::SamplePoint RunConfig::sampling() const {
  return sample_point == "left" ? adiabatic::SamplePoint::kLeftEndpoint
                                : adiabatic::SamplePoint::kMidpoint;
}

int RunConfig::resolve_threads() const {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("CHERNSIM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int n_tasks, int workers, const std::function<void(int)>& fn) {
  workers = std::min(workers, n_tasks);
  if (workers <= 1) {
    for (int i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n_tasks) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double circuit_plaquette_flux(const BlochModel& model, const Vector2d& corner, double dk,
                              const RunConfig& config, std::uint64_t seed) {
  const auto path = adiabatic::plaquette_path(corner, dk, config.steps_per_link);
  const auto plan =
      adiabatic::double_loop_plan(model, path, config.total_time, config.sampling());
  const auto est = readout::hadamard_test(plan, ground_prep_unitary(model, corner),
                                          make_execution(config, seed));
  return est.theta / 2.0;
}

namespace {

/// One full flux grid through the configured backend.
oracle::FluxGrid flux_grid_once(const BlochModel& model, const RunConfig& config,
                                std::uint64_t run_seed, int workers) {
  const int n = config.grid_n;
  if (config.backend == "oracle") return oracle::chern_fukui(model, n);

  const double dk = 2.0 * kPi / n;
  oracle::FluxGrid grid;
  grid.n = n;
  grid.flux.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::vector<std::string> errors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

  parallel_for(n * n, workers, [&](int task) {
    const int ix = task % n;
    const int iy = task / n;
    const Vector2d corner(-kPi + ix * dk, -kPi + iy * dk);
    grid.flux[static_cast<std::size_t>(iy)][static_cast<std::size_t>(ix)] = circuit_plaquette_flux(
        model, corner, dk, config, stable_hash(run_seed, static_cast<std::uint64_t>(task)));
  });

  grid.chern_real = grid.total_flux() / (2.0 * kPi);
  grid.chern_int = oracle::round_chern(grid.chern_real);
  return grid;
}

}  // namespace

FluxRecord cmd_flux(const RunConfig& config) {
  config.validate();
  Stopwatch timer;
  const auto model = config.make_model();
  const int workers = config.resolve_threads();

  FluxRecord record;
  record.config = config;
  record.config.command = "flux";
  const int repeats = config.backend == "oracle" ? 1 : config.repeats;
  for (int r = 0; r < repeats; ++r) {
    record.grid = flux_grid_once(*model, config, stable_hash(config.seed, 0x0f1ef00dULL + r),
                                 workers);
    record.chern_runs.push_back(record.grid.chern_real);
  }
  double lo = record.chern_runs.front(), hi = lo, sum = 0.0;
  for (double c : record.chern_runs) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
    sum += c;
  }
  record.chern_real = sum / static_cast<double>(record.chern_runs.size());
  record.chern_int = oracle::round_chern(record.chern_real);
  record.spread = hi - lo;
  record.wall_time_s = timer.seconds();
  return record;
}

SweepRecord cmd_sweep(const RunConfig& config, const std::string& parameter, double from,
                      double to, int points) {
  config.validate();
  if (points < 2) throw ConfigError("sweep needs at least 2 points");
  Stopwatch timer;

  SweepRecord record;
  record.config = config;
  record.config.command = "sweep";
  record.parameter = parameter;
  record.points.resize(static_cast<std::size_t>(points));

  const int workers = config.resolve_threads();
  // distribute sweep values across workers; each flux evaluation then runs
  // serially so the task order, and therefore every seed, stays fixed
  parallel_for(points, workers, [&](int i) {
    SweepPoint& point = record.points[static_cast<std::size_t>(i)];
    point.value = from + (to - from) * i / (points - 1);
    RunConfig sub = config;
    sub.threads = 1;
    sub.seed = stable_hash(config.seed, static_cast<std::uint64_t>(i));
    if (parameter == "u") {
      sub.u = point.value;
    } else if (parameter == "m" || parameter == "mass") {
      sub.mass = point.value;
    } else if (parameter == "phi") {
      sub.phi = point.value;
    } else {
      throw ConfigError("unknown sweep parameter '" + parameter + "' (u, m or phi)");
    }
    try {
      FluxRecord flux = cmd_flux(sub);
      point.chern_real = flux.chern_real;
      point.chern_int = flux.chern_int;
      point.spread = flux.spread;
    } catch (const GapClosureError& e) {
      point.error = e.what();
    } catch (const std::runtime_error& e) {
      point.error = e.what();
    }
  });
  record.wall_time_s = timer.seconds();
  return record;
}

PhaseDiagramRecord cmd_phase_diagram(const RunConfig& config, double mass_from, double mass_to,
                                     int mass_points, double phi_from, double phi_to,
                                     int phi_points) {
  config.validate();
  if (config.model != "haldane") throw ConfigError("phase-diagram runs on the haldane model");
  if (mass_points < 1 || phi_points < 1) throw ConfigError("phase-diagram needs >= 1 point per axis");
  if (mass_points == 1 && mass_from != mass_to) {
    throw ConfigError("a single mass point needs mass-from == mass-to");
  }
  Stopwatch timer;

  PhaseDiagramRecord record;
  record.config = config;
  record.config.command = "phase-diagram";
  for (int i = 0; i < mass_points; ++i) {
    record.mass_values.push_back(mass_points == 1 ? mass_from
                                                  : mass_from + (mass_to - mass_from) * i /
                                                                    (mass_points - 1));
  }
  for (int j = 0; j < phi_points; ++j) {
    record.phi_values.push_back(phi_points == 1 ? phi_from
                                                : phi_from + (phi_to - phi_from) * j /
                                                                 (phi_points - 1));
  }
  record.chern_real.assign(static_cast<std::size_t>(mass_points),
                           std::vector<double>(static_cast<std::size_t>(phi_points), 0.0));
  record.chern_int.assign(static_cast<std::size_t>(mass_points),
                          std::vector<int>(static_cast<std::size_t>(phi_points), 0));
  record.errors.assign(static_cast<std::size_t>(mass_points),
                       std::vector<std::string>(static_cast<std::size_t>(phi_points)));

  const int workers = config.resolve_threads();
  parallel_for(mass_points * phi_points, workers, [&](int task) {
    const int i = task / phi_points;
    const int j = task % phi_points;
    RunConfig sub = config;
    sub.threads = 1;
    sub.seed = stable_hash(config.seed, static_cast<std::uint64_t>(task));
    sub.mass = record.mass_values[static_cast<std::size_t>(i)];
    sub.phi = record.phi_values[static_cast<std::size_t>(j)];
    try {
      FluxRecord flux = cmd_flux(sub);
      record.chern_real[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = flux.chern_real;
      record.chern_int[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = flux.chern_int;
    } catch (const std::runtime_error& e) {
      record.errors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e.what();
    }
  });
  record.wall_time_s = timer.seconds();
  return record;
}

WannierRecord cmd_wannier(const RunConfig& config) {
  config.validate();
  if (config.model != "qwz" && !config.full_double_loop) {
    throw ConfigError("the mirror shortcut applies to the qwz model only; "
                      "pass the full-double-loop flag for other models");
  }
  Stopwatch timer;
  const auto model = config.make_model();

  WannierRecord record;
  record.config = config;
  record.config.command = "wannier";
  const int n_ky = config.n_ky;
  record.trace.ky.resize(static_cast<std::size_t>(n_ky));
  record.trace.centers.resize(static_cast<std::size_t>(n_ky));
  record.density_rows.resize(static_cast<std::size_t>(n_ky));

  const double quantization = 2.0 * kPi / std::pow(2.0, config.qpe_m_meas);
  const int workers = config.resolve_threads();
  parallel_for(n_ky, workers, [&](int j) {
    const double ky = -kPi + 2.0 * kPi * j / n_ky;
    record.trace.ky[static_cast<std::size_t>(j)] = ky;

    if (config.backend == "oracle") {
      std::vector<VectorXc> line;
      line.reserve(static_cast<std::size_t>(2 * config.n_k));
      for (int i = 0; i < 2 * config.n_k; ++i) {
        line.push_back(ground_state(*model, Vector2d(-kPi + i * kPi / config.n_k, ky)));
      }
      double center = oracle::wilson_loop(line);
      if (center >= kPi) center = -kPi;
      record.trace.centers[static_cast<std::size_t>(j)] = center;
      auto density = readout::wannier_density({center}, config.density_eps, config.density_grid);
      record.density_rows[static_cast<std::size_t>(j)] = std::move(density.p);
      if (j == 0) record.density_x = std::move(density.x);
      return;
    }

    adiabatic::EvolutionPlan plan;
    int loop_factor = 1;
    if (config.full_double_loop) {
      plan = adiabatic::double_loop_plan(*model, adiabatic::line_path(ky, config.n_k),
                                         config.total_time, config.sampling());
      loop_factor = 2;
    } else {
      plan = adiabatic::mirror_symmetric_plan(*model, ky, config.n_k, config.total_time);
    }
    const Matrix2c u_init = ground_prep_unitary(*model, Vector2d(-kPi, ky));
    const auto exec = make_execution(config, stable_hash(config.seed, static_cast<std::uint64_t>(j)));
    const auto qpe = readout::qpe_run(plan, u_init, config.qpe_m, config.qpe_m_meas, exec,
                                      loop_factor);
    record.trace.centers[static_cast<std::size_t>(j)] = qpe.mode_berry_phase();
    auto density = readout::wannier_density_weighted(qpe.berry_phases, config.density_eps,
                                                     config.density_grid);
    record.density_rows[static_cast<std::size_t>(j)] = std::move(density.p);
    if (j == 0) record.density_x = std::move(density.x);
  });

  try {
    record.trace.winding = readout::winding_number(
        record.trace.centers, config.backend == "oracle" ? 0.0 : quantization);
  } catch (const std::runtime_error& e) {
    throw ConfigError(std::string(e.what()) + " (increase --ky-points)");
  }
  record.wall_time_s = timer.seconds();
  return record;
}

HeisenbergRecord cmd_heisenberg(const HeisenbergConfig& config) {
  if (config.n_sites < 2 || config.n_sites > 12) {
    throw ConfigError("heisenberg chains support 2..12 sites");
  }
  if (config.n_theta < 3) throw ConfigError("need at least 3 twist-angle points");
  Stopwatch timer;

  TwistedHeisenbergChain chain = TwistedHeisenbergChain::uniform(
      config.n_sites, config.coupling, config.twisted_link, 0.0, config.periodic);
  if (config.twisted_link < 0 || config.twisted_link >= chain.link_count()) {
    throw ConfigError("twisted link index out of range");
  }
  chain.couplings[static_cast<std::size_t>(config.twisted_link)] = config.twist_coupling;

  HeisenbergRecord record;
  record.config = config;
  try {
    record.gamma = oracle::heisenberg_twist_berry_phase(chain, config.n_theta);
  } catch (const std::runtime_error& e) {
    throw DegeneracyError(e.what());
  }
  record.residual = quantization_residual(record.gamma, &record.quantized);
  record.wall_time_s = timer.seconds();
  return record;
}

std::vector<std::vector<double>> tile_extended(const oracle::FluxGrid& grid, int factor) {
  const int n = grid.n;
  const int big = n * factor;
  // the tiled window is centered on the origin: index 0 corresponds to
  // momentum -factor*pi, which maps periodically into the first zone
  std::vector<std::vector<double>> out(static_cast<std::size_t>(big),
                                       std::vector<double>(static_cast<std::size_t>(big), 0.0));
  auto wrap = [&](int i) {
    const int shift = (factor - 1) * n / 2;
    return ((i + shift) % n + n) % n;
  };
  for (int iy = 0; iy < big; ++iy) {
    for (int ix = 0; ix < big; ++ix) {
      out[static_cast<std::size_t>(iy)][static_cast<std::size_t>(ix)] =
          grid.flux[static_cast<std::size_t>(wrap(iy))][static_cast<std::size_t>(wrap(ix))];
    }
  }
  return out;
}

json config_to_json(const RunConfig& c) {
  json model = {{"name", c.model}};
  if (c.model == "qwz") {
    model["u"] = c.u;
  } else {
    model["m"] = c.mass;
    model["phi"] = c.phi;
    model["t1"] = c.t1;
    model["t2"] = c.t2;
  }
  json j = {
      {"command", c.command},
      {"model", model},
      {"grid_n", c.grid_n},
      {"steps_per_link", c.steps_per_link},
      {"total_time", c.total_time},
      {"sample_point", c.sample_point},
      {"backend", c.backend},
      {"shots", c.shots},
      {"chi_max", c.chi_max},
      {"cutoff", c.cutoff},
      {"seed", c.seed},
      {"repeats", c.repeats},
      {"zone", c.zone},
      {"zone_factor", c.zone_factor},
  };
  if (c.backend == "noisy") {
    j["noise"] = {{"depolarizing_p1", c.noise_p1},
                  {"depolarizing_p2", c.noise_p2},
                  {"readout_flip_p", c.readout_flip_p}};
  }
  if (c.command == "wannier") {
    j["n_k"] = c.n_k;
    j["qpe_m"] = c.qpe_m;
    j["qpe_m_meas"] = c.qpe_m_meas;
    j["n_ky"] = c.n_ky;
    j["density_eps"] = c.density_eps;
    j["density_grid"] = c.density_grid;
    j["full_double_loop"] = c.full_double_loop;
  }
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.command = j.value("command", c.command);
  const json& model = j.at("model");
  c.model = model.at("name").get<std::string>();
  if (c.model == "qwz") {
    c.u = model.value("u", c.u);
  } else {
    c.mass = model.value("m", c.mass);
    c.phi = model.value("phi", c.phi);
    c.t1 = model.value("t1", c.t1);
    c.t2 = model.value("t2", c.t2);
  }
  c.grid_n = j.value("grid_n", c.grid_n);
  c.steps_per_link = j.value("steps_per_link", c.steps_per_link);
  c.total_time = j.value("total_time", c.total_time);
  c.sample_point = j.value("sample_point", c.sample_point);
  c.backend = j.value("backend", c.backend);
  c.shots = j.value("shots", c.shots);
  c.chi_max = j.value("chi_max", c.chi_max);
  c.cutoff = j.value("cutoff", c.cutoff);
  c.seed = j.value("seed", c.seed);
  c.repeats = j.value("repeats", c.repeats);
  c.zone = j.value("zone", c.zone);
  c.zone_factor = j.value("zone_factor", c.zone_factor);
  if (j.contains("noise")) {
    c.noise_p1 = j["noise"].value("depolarizing_p1", c.noise_p1);
    c.noise_p2 = j["noise"].value("depolarizing_p2", c.noise_p2);
    c.readout_flip_p = j["noise"].value("readout_flip_p", c.readout_flip_p);
  }
  c.n_k = j.value("n_k", c.n_k);
  c.qpe_m = j.value("qpe_m", c.qpe_m);
  c.qpe_m_meas = j.value("qpe_m_meas", c.qpe_m_meas);
  c.n_ky = j.value("n_ky", c.n_ky);
  c.density_eps = j.value("density_eps", c.density_eps);
  c.density_grid = j.value("density_grid", c.density_grid);
  c.full_double_loop = j.value("full_double_loop", c.full_double_loop);
  return c;
}

namespace {

json meta_json(const RunConfig& c, double wall_time_s, bool include_timing) {
  json meta = {{"version", kVersion}, {"seed", c.seed}, {"threads", c.resolve_threads()}};
  if (include_timing) meta["wall_time_s"] = wall_time_s;
  return meta;
}

}  // namespace

json to_json(const FluxRecord& r, bool include_timing) {
  json grid_rows;
  if (r.config.zone == "extended") {
    grid_rows = tile_extended(r.grid, r.config.zone_factor);
  } else {
    grid_rows = r.grid.flux;
  }
  json j = {
      {"config", config_to_json(r.config)},
      {"grid", grid_rows},
      {"chern_real", r.chern_real},
      {"chern_int", r.chern_int},
      {"chern_runs", r.chern_runs},
      {"spread", r.spread},
      {"meta", meta_json(r.config, r.wall_time_s, include_timing)},
  };
  return j;
}

json to_json(const SweepRecord& r, bool include_timing) {
  json points = json::array();
  for (const SweepPoint& p : r.points) {
    json row = {{"value", p.value}, {"spread", p.spread}};
    if (p.error.empty()) {
      row["chern_real"] = *p.chern_real;
      row["chern_int"] = *p.chern_int;
    } else {
      row["error"] = p.error;
    }
    points.push_back(row);
  }
  return json{{"config", config_to_json(r.config)},
              {"parameter", r.parameter},
              {"points", points},
              {"meta", meta_json(r.config, r.wall_time_s, include_timing)}};
}

json to_json(const PhaseDiagramRecord& r, bool include_timing) {
  // reference overlay: the exact boundary |m| = 3 sqrt(3) t2 |sin(phi)|
  json boundary = json::array();
  for (double phi : r.phi_values) {
    boundary.push_back({{"phi", phi},
                        {"m_abs", 3.0 * std::sqrt(3.0) * r.config.t2 * std::abs(std::sin(phi))}});
  }
  return json{{"config", config_to_json(r.config)},
              {"mass_values", r.mass_values},
              {"phi_values", r.phi_values},
              {"chern_real", r.chern_real},
              {"chern_int", r.chern_int},
              {"errors", r.errors},
              {"boundary", boundary},
              {"meta", meta_json(r.config, r.wall_time_s, include_timing)}};
}

json to_json(const WannierRecord& r, bool include_timing) {
  return json{{"config", config_to_json(r.config)},
              {"trace",
               {{"ky", r.trace.ky}, {"centers", r.trace.centers}, {"winding", r.trace.winding}}},
              {"density", {{"x", r.density_x}, {"rows", r.density_rows}}},
              {"chern_int", r.trace.winding},
              {"meta", meta_json(r.config, r.wall_time_s, include_timing)}};
}

json to_json(const HeisenbergRecord& r, bool include_timing) {
  json j = {{"config",
             {{"command", "heisenberg"},
              {"n_sites", r.config.n_sites},
              {"coupling", r.config.coupling},
              {"twist_coupling", r.config.twist_coupling},
              {"twisted_link", r.config.twisted_link},
              {"periodic", r.config.periodic},
              {"n_theta", r.config.n_theta},
              {"seed", r.config.seed}}},
            {"gamma", r.gamma},
            {"quantized", r.quantized},
            {"residual", r.residual},
            {"meta", json{{"version", kVersion}, {"seed", r.config.seed}}}};
  if (include_timing) j["meta"]["wall_time_s"] = r.wall_time_s;
  return j;
}

std::string to_csv(const FluxRecord& r) {
  std::ostringstream os;
  os << "kx_corner,ky_corner,flux\n";
  const int factor = r.config.zone == "extended" ? r.config.zone_factor : 1;
  const auto rows = factor == 1 ? r.grid.flux : tile_extended(r.grid, factor);
  const double dk = 2.0 * kPi / r.grid.n;
  const double origin = -factor * kPi;
  for (std::size_t iy = 0; iy < rows.size(); ++iy) {
    for (std::size_t ix = 0; ix < rows[iy].size(); ++ix) {
      os << origin + static_cast<double>(ix) * dk << "," << origin + static_cast<double>(iy) * dk
         << "," << rows[iy][ix] << "\n";
    }
  }
  return os.str();
}

std::string to_csv(const SweepRecord& r) {
  std::ostringstream os;
  os << r.parameter << ",chern_real,chern_int,spread,error\n";
  for (const SweepPoint& p : r.points) {
    os << p.value << ",";
    if (p.error.empty()) {
      os << *p.chern_real << "," << *p.chern_int << "," << p.spread << ",";
    } else {
      os << ",,," << "\"" << p.error << "\"";
    }
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const PhaseDiagramRecord& r) {
  std::ostringstream os;
  os << "m,phi,chern_real,chern_int,boundary_m_abs\n";
  for (std::size_t i = 0; i < r.mass_values.size(); ++i) {
    for (std::size_t j = 0; j < r.phi_values.size(); ++j) {
      os << r.mass_values[i] << "," << r.phi_values[j] << "," << r.chern_real[i][j] << ","
         << r.chern_int[i][j] << ","
         << 3.0 * std::sqrt(3.0) * r.config.t2 * std::abs(std::sin(r.phi_values[j])) << "\n";
    }
  }
  return os.str();
}

std::string to_csv(const WannierRecord& r) {
  std::ostringstream os;
  os << "ky,center\n";
  for (std::size_t j = 0; j < r.trace.ky.size(); ++j) {
    os << r.trace.ky[j] << "," << r.trace.centers[j] << "\n";
  }
  return os.str();
}

}  // namespace chernsim::pipeline
