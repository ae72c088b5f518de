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
#include <map>
#include <utility>
#include <vector>

#include "chernsim/adiabatic.hpp"
#include "chernsim/circuit.hpp"
#include "chernsim/common.hpp"
#include "chernsim/statevector.hpp"

namespace chernsim::readout {

/// How a readout circuit is executed.
struct Execution {
  enum class Kind { kStatevector, kStatevectorShots, kMps, kNoisy };
  Kind kind = Kind::kStatevector;
  std::uint64_t shots = 0;  // 0 = exact probabilities where the kind allows
  std::uint64_t seed = 0;
  int chi_max = 64;
  double cutoff = 1e-12;
  NoiseSpec noise;

  static Execution statevector() { return {}; }
  static Execution statevector_shots(std::uint64_t shots, std::uint64_t seed);
  static Execution mps(int chi_max, std::uint64_t shots = 0, std::uint64_t seed = 0);
  static Execution noisy(const NoiseSpec& noise, std::uint64_t shots);
};

/// Outcome of the paired Hadamard-test circuits. theta reconstructs the
/// conjugated phase of the return amplitude <psi| W |psi> (the sign
/// convention of oracle::wilson_loop); when the evolution is not perfectly
/// adiabatic that amplitude has modulus < 1, which shows up in
/// consistency() dropping below 1.
struct HadamardEstimate {
  double p_cos0 = 1.0;
  double p_sin0 = 0.5;
  std::uint64_t shots = 0;  // 0 = exact probabilities
  double theta = 0.0;       // in [-pi, pi)

  /// cos^2 + sin^2 of the implied estimates; 1 for an exact eigenphase.
  double consistency() const {
    const double c = 2.0 * p_cos0 - 1.0;
    const double s = 1.0 - 2.0 * p_sin0;
    return c * c + s * s;
  }
};

/// Phase-estimation outcome. decoded_phases are the raw register phases,
/// integer multiples of 2pi/2^m_meas mapped to [-pi, pi); berry_phases
/// divide them by the loop factor of the supplied plan (2 for a double
/// loop, 1 for a mirror-split sweep) and carry the Wilson-convention sign.
/// Weights are shot counts, or exact probabilities when shots = 0.
struct QpeResult {
  int m = 0;
  int m_meas = 0;
  std::map<std::string, double> histogram;
  std::vector<std::pair<double, double>> decoded_phases;  // (phase, weight)
  std::vector<std::pair<double, double>> berry_phases;    // (phase, weight)

  /// Highest-weight Berry phase (the density peak).
  double mode_berry_phase() const;
};

/// The two-qubit interferometric circuits reading out the phase of the
/// plan's unitary: line 0 is the auxiliary, line 1 the system qubit
/// prepared by u_init. With theta the reported (Wilson-convention) phase,
/// the first circuit gives P_cos(0) = (1 + cos theta)/2 and the second
/// inserts an S-dagger on the auxiliary so P_sin(0) = (1 - sin theta)/2.
std::pair<Circuit, Circuit> hadamard_test_circuits(const adiabatic::EvolutionPlan& plan,
                                                   const Matrix2c& u_init);

/// theta = atan2(1 - 2 p_sin0, 2 p_cos0 - 1) in [-pi, pi); inputs are
/// clamped to [0, 1] so statistical overshoot cannot escape the domain.
double reconstruct_theta(double p_cos0, double p_sin0);

/// Execute both Hadamard-test circuits and reconstruct the phase.
HadamardEstimate hadamard_test(const adiabatic::EvolutionPlan& plan, const Matrix2c& u_init,
                               const Execution& exec);

/// Quantum phase estimation on the plan's unitary: m work qubits (line 0 =
/// most significant), the system qubit last, controlled plan repetitions
/// (2^j applications of every factor, never matrix powers), inverse QFT,
/// top m_meas lines measured. loop_factor divides the decoded register
/// phase into a Berry phase: pass 2 when the plan realizes a double loop
/// (phase 2 Theta_B), 1 for a mirror-split single sweep.
QpeResult qpe_run(const adiabatic::EvolutionPlan& plan, const Matrix2c& u_init, int m, int m_meas,
                  const Execution& exec, int loop_factor = 2);

/// Lorentzian-broadened density on a uniform grid over [-pi, pi):
/// P(x) = sum_j w_j * eps / (eps^2 + d(x, x_j)^2), with d the periodic
/// distance by default (set periodic = false for the plain difference).
struct DensityTable {
  std::vector<double> x;
  std::vector<double> p;
};

DensityTable wannier_density(const std::vector<double>& samples, double eps, int grid_points = 256,
                             bool periodic = true);
DensityTable wannier_density_weighted(const std::vector<std::pair<double, double>>& samples,
                                      double eps, int grid_points = 256, bool periodic = true);

/// Winding of a closed sweep of angles: consecutive jumps (including the
/// closure) are wrapped to the principal branch and summed. Throws
/// std::invalid_argument for fewer than 8 points and std::runtime_error
/// when a wrapped jump exceeds pi/2 + quantization_step (undersampled
/// sweep; add more points).
int winding_number(const std::vector<double>& centers, double quantization_step = 0.0);

}  // namespace chernsim::readout
