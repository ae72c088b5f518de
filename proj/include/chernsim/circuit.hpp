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

#include <string>
#include <vector>

#include "chernsim/common.hpp"

namespace chernsim {

// Bit-order convention used throughout: line 0 is the most significant bit
// of a basis index, so |b0 b1 ... b_{w-1}> maps to index sum_i b_i 2^{w-1-i}.
// In the phase-estimation register line 0 carries the most significant
// phase bit.

enum class GateKind {
  kHadamard,
  kSGate,      // diag(1, i)
  kSDagger,    // diag(1, -i)
  kPhase,      // diag(1, e^{i*angle})
  kUnitary1Q,
  kUnitary2Q,  // matrix index: first listed line is the more significant bit
  kControlledU,
  kSwap,
};

/// One gate. Construct through the factory functions below, which validate
/// unitarity (1e-12) and line arity.
struct Gate {
  GateKind kind = GateKind::kHadamard;
  std::vector<int> lines;     // control first for kControlledU
  double angle = 0.0;         // kPhase only
  MatrixXc matrix;            // kUnitary1Q/2Q/ControlledU payload

  /// Matrix acting on the gate's own lines (2x2, or 4x4 with the first
  /// listed line as the more significant bit; ControlledU embeds its
  /// payload in the control=1 block).
  MatrixXc local_unitary() const;
  int arity() const { return static_cast<int>(lines.size()); }
};

Gate make_hadamard(int line);
Gate make_s(int line);
Gate make_s_dagger(int line);
Gate make_phase(int line, double angle);
Gate make_unitary_1q(int line, const Matrix2c& u);
Gate make_unitary_2q(int line_a, int line_b, const Matrix4c& u);
Gate make_controlled_u(int control, const std::vector<int>& targets, const MatrixXc& u);
Gate make_swap(int line_a, int line_b);

/// Immutable-by-convention ordered gate list on `width` qubit lines.
class Circuit {
 public:
  explicit Circuit(int width);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<int>& measured_lines() const { return measured_; }

  /// Value-semantics append: validates the gate against the width.
  /// Throws std::out_of_range for a line index outside [0, width).
  Circuit append(const Gate& g) const;
  void append_inplace(const Gate& g);
  void append_all(const Circuit& fragment);  // widths must match

  void set_measured_lines(std::vector<int> lines);

  /// Debug dump, one gate per line. Format is not stability-guaranteed.
  std::string to_text() const;

 private:
  int width_;
  std::vector<Gate> gates_;
  std::vector<int> measured_;
};

/// Inverse quantum Fourier transform fragment on m lines (line 0 = most
/// significant bit; trailing SWAPs included so the composed unitary equals
/// the inverse DFT matrix in this bit order).
Circuit inverse_qft(int m);

/// Forward QFT fragment, the inverse of inverse_qft(m).
Circuit forward_qft(int m);

/// Full 2^width x 2^width matrix of the circuit (test oracle; width <= 10).
MatrixXc composed_unitary(const Circuit& c);

/// Embedding of a single gate into the full register space (width <= 10).
MatrixXc embed_gate(const Gate& g, int width);

}  // namespace chernsim
