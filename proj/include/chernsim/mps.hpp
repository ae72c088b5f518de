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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chernsim/circuit.hpp"
#include "chernsim/common.hpp"
#include "chernsim/statevector.hpp"

namespace chernsim {

/// Matrix-product-state register with a hard bond-dimension cap. Two-qubit
/// gates act on adjacent chain positions only and are followed by a
/// truncated SVD; run_circuit() routes long-range gates by inserting SWAP
/// gates and tracking the resulting line permutation.
///
/// A mixed-canonical form is maintained (left-orthonormal tensors left of
/// the center, right-orthonormal right of it), so each truncation is
/// locally optimal and the state norm is the norm of the center tensor.
/// The state is renormalized after every truncation.
class MpsState {
 public:
  MpsState(int width, int chi_max, double cutoff = 1e-12);

  static MpsState from_basis(int width, const std::string& bitstring, int chi_max,
                             double cutoff = 1e-12);

  int width() const { return width_; }
  int chi_max() const { return chi_max_; }
  double cutoff() const { return cutoff_; }
  double discarded_total() const { return discarded_total_; }
  double norm() const;

  /// Internal bond dimensions (size width-1); all <= chi_max.
  std::vector<int> bond_dims() const;
  int max_bond_dim() const;

  /// Chain position currently holding a logical line (identity until
  /// run_circuit has routed a long-range gate).
  int position_of_line(int line) const { return line_to_pos_[static_cast<std::size_t>(line)]; }

  /// Apply a gate at its literal line positions: 1-qubit gates anywhere,
  /// 2-qubit gates on adjacent positions only (throws BackendError
  /// otherwise). Line indices here refer to chain positions.
  void apply_gate(const Gate& g);

  /// Execute a circuit expressed on logical lines, inserting SWAP chains
  /// for non-adjacent two-qubit gates (the moved line stays put; the
  /// permutation is tracked internally and unwound in readout).
  void run_circuit(const Circuit& c);

  /// Full contraction to an exact statevector in logical line order
  /// (width <= 14).
  StateVector contract_to_statevector() const;

  /// Exact outcome probabilities on logical lines via contraction.
  std::map<std::string, double> probabilities(const std::vector<int>& lines) const;

  /// Sequential left-to-right conditional sampling; deterministic given the
  /// seed. Keys are bitstrings over the requested logical lines (ascending).
  std::map<std::string, std::uint64_t> sample(const std::vector<int>& lines, std::uint64_t shots,
                                              std::uint64_t seed) const;

 private:
  struct SiteTensor {
    // tensor A[s] is a (chi_left x chi_right) matrix per physical index s
    std::array<MatrixXc, 2> a;
    Eigen::Index left() const { return a[0].rows(); }
    Eigen::Index right() const { return a[0].cols(); }
  };

  void move_center(int to);
  void apply_1q(int pos, const Matrix2c& u);
  void apply_2q_adjacent(int pos_left, const Matrix4c& u);
  void route_adjacent(int pos_from, int pos_to);  // moves content of pos_from next to pos_to

  int width_;
  int chi_max_;
  double cutoff_;
  double discarded_total_ = 0.0;
  int center_ = 0;
  std::vector<SiteTensor> sites_;
  std::vector<int> line_to_pos_;
  std::vector<int> pos_to_line_;
};

}  // namespace chernsim
