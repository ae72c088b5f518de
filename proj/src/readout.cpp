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

#include "chernsim/readout.hpp"

#include <algorithm>
#include <cmath>

#include "chernsim/mps.hpp"
#include "chernsim/rng.hpp"

namespace chernsim::readout {

Execution Execution::statevector_shots(std::uint64_t shots, std::uint64_t seed) {
  Execution e;
  e.kind = Kind::kStatevectorShots;
  e.shots = shots;
  e.seed = seed;
  return e;
}

Execution Execution::mps(int chi_max, std::uint64_t shots, std::uint64_t seed) {
  Execution e;
  e.kind = Kind::kMps;
  e.chi_max = chi_max;
  e.shots = shots;
  e.seed = seed;
  return e;
}

Execution Execution::noisy(const NoiseSpec& noise, std::uint64_t shots) {
  Execution e;
  e.kind = Kind::kNoisy;
  e.noise = noise;
  e.shots = shots;
  e.seed = noise.seed;
  return e;
}

namespace {

/// Outcome weights over the circuit's measured lines: exact probabilities
/// when shots = 0, counts otherwise.
std::map<std::string, double> execute_measured(const Circuit& c, const Execution& exec) {
  const std::vector<int>& lines = c.measured_lines();
  if (lines.empty()) throw BackendError("execute_measured: circuit has no measured lines");
  switch (exec.kind) {
    case Execution::Kind::kStatevector: {
      StateVector out = run(c, StateVector(c.width()));
      return probabilities(out, lines);
    }
    case Execution::Kind::kStatevectorShots: {
      if (exec.shots < 1) throw BackendError("execute_measured: shots must be >= 1");
      StateVector out = run(c, StateVector(c.width()));
      std::map<std::string, double> weights;
      for (const auto& [bits, count] : sample(out, lines, exec.shots, exec.seed)) {
        weights[bits] = static_cast<double>(count);
      }
      return weights;
    }
    case Execution::Kind::kMps: {
      MpsState state(c.width(), exec.chi_max, exec.cutoff);
      state.run_circuit(c);
      if (exec.shots == 0) return state.probabilities(lines);
      std::map<std::string, double> weights;
      for (const auto& [bits, count] : state.sample(lines, exec.shots, exec.seed)) {
        weights[bits] = static_cast<double>(count);
      }
      return weights;
    }
    case Execution::Kind::kNoisy: {
      if (exec.shots < 1) throw BackendError("execute_measured: noisy runs need shots >= 1");
      std::map<std::string, double> weights;
      for (const auto& [bits, count] :
           sample_noisy(c, StateVector(c.width()), lines, exec.shots, exec.noise)) {
        weights[bits] = static_cast<double>(count);
      }
      return weights;
    }
  }
  throw BackendError("execute_measured: unknown execution kind");
}

double weight_of_zero_on_line0(const std::map<std::string, double>& weights) {
  double zero = 0.0, total = 0.0;
  for (const auto& [bits, w] : weights) {
    total += w;
    if (bits[0] == '0') zero += w;
  }
  if (total <= 0.0) throw BackendError("no measurement weight collected");
  return zero / total;
}

}  // namespace

std::pair<Circuit, Circuit> hadamard_test_circuits(const adiabatic::EvolutionPlan& plan,
                                                   const Matrix2c& u_init) {
  if (!numerics::is_unitary(u_init)) {
    throw std::invalid_argument("hadamard_test_circuits: u_init is not unitary");
  }
  Circuit base(2);
  base.append_inplace(make_unitary_1q(1, u_init));
  base.append_inplace(make_hadamard(0));
  for (const adiabatic::PlanFactor& f : plan.factors) {
    base.append_inplace(make_controlled_u(0, {1}, f.gate()));
  }
  Circuit cos_variant = base;
  cos_variant.append_inplace(make_hadamard(0));
  cos_variant.set_measured_lines({0});

  Circuit sin_variant = base;
  sin_variant.append_inplace(make_s_dagger(0));
  sin_variant.append_inplace(make_hadamard(0));
  sin_variant.set_measured_lines({0});
  return {cos_variant, sin_variant};
}

double reconstruct_theta(double p_cos0, double p_sin0) {
  const double pc = std::clamp(p_cos0, 0.0, 1.0);
  const double ps = std::clamp(p_sin0, 0.0, 1.0);
  const double c = 2.0 * pc - 1.0;
  const double s = 1.0 - 2.0 * ps;
  if (c == 0.0 && s == 0.0) return 0.0;
  double theta = std::atan2(s, c);
  if (theta >= kPi) theta = -kPi;
  return theta;
}

HadamardEstimate hadamard_test(const adiabatic::EvolutionPlan& plan, const Matrix2c& u_init,
                               const Execution& exec) {
  auto [cos_c, sin_c] = hadamard_test_circuits(plan, u_init);
  Execution sin_exec = exec;
  if (exec.kind != Execution::Kind::kStatevector) {
    sin_exec.seed = splitmix64(exec.seed ^ 0x73696e65ULL);  // decorrelate the two runs
    if (exec.kind == Execution::Kind::kNoisy) sin_exec.noise.seed = sin_exec.seed;
  }
  HadamardEstimate est;
  est.p_cos0 = weight_of_zero_on_line0(execute_measured(cos_c, exec));
  est.p_sin0 = weight_of_zero_on_line0(execute_measured(sin_c, sin_exec));
  est.shots = exec.shots;
  est.theta = reconstruct_theta(est.p_cos0, est.p_sin0);
  return est;
}

double QpeResult::mode_berry_phase() const {
  if (berry_phases.empty()) throw BackendError("QpeResult: no phase samples");
  double best_w = -1.0, best_phase = 0.0;
  for (const auto& [phase, w] : berry_phases) {
    if (w > best_w) {
      best_w = w;
      best_phase = phase;
    }
  }
  return best_phase;
}

QpeResult qpe_run(const adiabatic::EvolutionPlan& plan, const Matrix2c& u_init, int m, int m_meas,
                  const Execution& exec, int loop_factor) {
  if (m < 1 || m_meas < 1 || m_meas > m) throw std::invalid_argument("qpe_run: need m >= m_meas >= 1");
  if (loop_factor != 1 && loop_factor != 2) throw std::invalid_argument("qpe_run: loop_factor is 1 or 2");

  const int system = m;  // system qubit on the last line
  Circuit c(m + 1);
  c.append_inplace(make_unitary_1q(system, u_init));
  for (int j = 0; j < m; ++j) c.append_inplace(make_hadamard(j));
  // line j holds phase bit of weight 2^{m-1-j}: repeat the plan that many
  // times under its control, factor by factor
  for (int j = m - 1; j >= 0; --j) {
    const std::uint64_t reps = std::uint64_t(1) << (m - 1 - j);
    for (std::uint64_t r = 0; r < reps; ++r) {
      for (const adiabatic::PlanFactor& f : plan.factors) {
        c.append_inplace(make_controlled_u(j, {system}, f.gate()));
      }
    }
  }
  const Circuit iqft = inverse_qft(m);
  for (const Gate& g : iqft.gates()) c.append_inplace(g);
  std::vector<int> measured(static_cast<std::size_t>(m_meas));
  for (int j = 0; j < m_meas; ++j) measured[static_cast<std::size_t>(j)] = j;
  c.set_measured_lines(measured);

  QpeResult result;
  result.m = m;
  result.m_meas = m_meas;
  result.histogram = execute_measured(c, exec);

  const double grid_step = 2.0 * kPi / std::pow(2.0, m_meas);
  for (const auto& [bits, w] : result.histogram) {
    std::uint64_t x = 0;
    for (char b : bits) x = (x << 1) | (b == '1' ? 1u : 0u);
    double raw = grid_step * static_cast<double>(x);  // in [0, 2pi)
    if (raw >= kPi) raw -= 2.0 * kPi;                 // to [-pi, pi)
    result.decoded_phases.emplace_back(raw, w);
    // the register accumulates the adiabatic phase; the reported Berry
    // phase follows the Wilson-product sign convention (its negative)
    double berry = -raw / loop_factor;
    if (berry == kPi) berry = -kPi;
    result.berry_phases.emplace_back(berry, w);
  }
  return result;
}

namespace {

DensityTable density_impl(const std::vector<std::pair<double, double>>& samples, double eps,
                          int grid_points, bool periodic) {
  if (samples.empty()) throw std::invalid_argument("wannier_density: empty sample set");
  if (!(eps > 0.0)) throw std::invalid_argument("wannier_density: eps must be > 0");
  if (grid_points < 2) throw std::invalid_argument("wannier_density: grid too small");
  DensityTable table;
  table.x.resize(static_cast<std::size_t>(grid_points));
  table.p.assign(static_cast<std::size_t>(grid_points), 0.0);
  for (int i = 0; i < grid_points; ++i) {
    const double x = -kPi + 2.0 * kPi * i / grid_points;
    table.x[static_cast<std::size_t>(i)] = x;
    double p = 0.0;
    for (const auto& [center, w] : samples) {
      double d = x - center;
      if (periodic) d = std::remainder(d, 2.0 * kPi);
      p += w * eps / (eps * eps + d * d);
    }
    table.p[static_cast<std::size_t>(i)] = p;
  }
  return table;
}

}  // namespace

DensityTable wannier_density(const std::vector<double>& samples, double eps, int grid_points,
                             bool periodic) {
  std::vector<std::pair<double, double>> weighted;
  weighted.reserve(samples.size());
  for (double s : samples) weighted.emplace_back(s, 1.0);
  return density_impl(weighted, eps, grid_points, periodic);
}

DensityTable wannier_density_weighted(const std::vector<std::pair<double, double>>& samples,
                                      double eps, int grid_points, bool periodic) {
  return density_impl(samples, eps, grid_points, periodic);
}

int winding_number(const std::vector<double>& centers, double quantization_step) {
  if (centers.size() < 8) {
    throw std::invalid_argument("winding_number: need at least 8 points over the closed sweep");
  }
  double total = 0.0;
  const double guard = kPi / 2.0 + quantization_step;
  for (std::size_t j = 0; j < centers.size(); ++j) {
    const double jump = std::remainder(centers[(j + 1) % centers.size()] - centers[j], 2.0 * kPi);
    if (std::abs(jump) > guard) {
      throw std::runtime_error(
          "winding_number: jump of " + std::to_string(std::abs(jump)) +
          " rad between consecutive centers; the sweep is undersampled, use more points");
    }
    total += jump;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace chernsim::readout
