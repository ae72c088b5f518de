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
#include <string>
#include <vector>

#include "chernsim/circuit.hpp"
#include "chernsim/common.hpp"

namespace chernsim {

/// Exact pure state on `width` qubit lines. Amplitude indexing follows the
/// global convention (line 0 = most significant bit).
class StateVector {
 public:
  explicit StateVector(int width);  // |00...0>
  StateVector(int width, VectorXc amplitudes);

  static StateVector from_basis(int width, const std::string& bitstring);

  int width() const { return width_; }
  const VectorXc& amplitudes() const { return amps_; }
  VectorXc& amplitudes() { return amps_; }
  double norm() const { return amps_.norm(); }

  void apply_gate(const Gate& g);

 private:
  int width_;
  VectorXc amps_;
};

/// Generic depolarizing + readout-flip noise channel. Depolarizing events
/// insert a uniformly random Pauli (I, X, Y or Z) on each line a gate
/// touches; readout flips act per measured bit at sampling time.
struct NoiseSpec {
  double depolarizing_p1 = 0.0;  // per 1-qubit gate, per line
  double depolarizing_p2 = 0.0;  // per >=2-qubit gate, per line
  double readout_flip_p = 0.0;
  std::uint64_t seed = 0;

  static NoiseSpec off() { return {}; }
  /// Uniform per-gate probability regardless of arity.
  static NoiseSpec uniform(double p, double readout, std::uint64_t seed);
  /// Defaults derived from typical superconducting-device average gate
  /// fidelities (99.6% one-qubit, 96.1% two-qubit).
  static NoiseSpec device_like(std::uint64_t seed);

  bool enabled() const {
    return depolarizing_p1 > 0.0 || depolarizing_p2 > 0.0 || readout_flip_p > 0.0;
  }
  void validate() const;
};

/// Run a circuit exactly. Throws BackendError on width mismatch.
StateVector run(const Circuit& c, const StateVector& initial);

/// Exact outcome probabilities on a subset of lines, marginalized over the
/// rest. Keys are bitstrings over the given lines in ascending line order.
std::map<std::string, double> probabilities(const StateVector& s, const std::vector<int>& lines);

/// Shot sampling from the exact distribution; deterministic given the seed.
std::map<std::string, std::uint64_t> sample(const StateVector& s, const std::vector<int>& lines,
                                            std::uint64_t shots, std::uint64_t seed);

/// Single stochastic noise trajectory. With all probabilities zero the
/// result is bit-identical to run().
StateVector run_noisy(const Circuit& c, const StateVector& initial, const NoiseSpec& noise);

/// Shot sampling under noise: one trajectory per shot, readout flips on the
/// measured bits. Deterministic given noise.seed.
std::map<std::string, std::uint64_t> sample_noisy(const Circuit& c, const StateVector& initial,
                                                  const std::vector<int>& lines,
                                                  std::uint64_t shots, const NoiseSpec& noise);

}  // namespace chernsim
